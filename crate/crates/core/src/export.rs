//! Serialization of constructed modules: a versioned JSON record carrying
//! the generator actions and the structure-constant slots, plus the flat
//! CSV form of the slots. Indices are 1-based on the wire.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{structure_constants, StructTensor};
use crate::perm::SignedPerm;
use crate::ungraded::{UngradedRep, Variant};

pub const FORMAT_VERSION: u32 = 1;

/// One generator action: basis index p (1-based position) maps to
/// sign[p] * basis[target[p]].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorAction {
    pub target: Vec<usize>,
    pub sign: Vec<i8>,
}

/// Lossless record of a constructed module and its structure constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub format: u32,
    pub k: usize,
    pub variant: Variant,
    pub m: usize,
    pub n: usize,
    pub generators: Vec<GeneratorAction>,
    /// (a, p, q, sign) slots of the structure tensor, 1-based.
    pub triples: Vec<(usize, usize, usize, i8)>,
    pub provenance: String,
}

impl ExportRecord {
    pub fn from_rep(rep: &UngradedRep) -> Self {
        let tensor = structure_constants(rep);
        let generators = rep
            .gens()
            .iter()
            .map(|g| GeneratorAction {
                target: g.targets().iter().map(|&q| q + 1).collect(),
                sign: g.signs().to_vec(),
            })
            .collect();
        let triples = tensor
            .triples()
            .map(|(a, p, q, s)| (a + 1, p + 1, q + 1, s))
            .collect();
        ExportRecord {
            format: FORMAT_VERSION,
            k: rep.k(),
            variant: rep.variant(),
            m: tensor.m(),
            n: tensor.n(),
            generators,
            triples,
            provenance: rep.provenance().to_string(),
        }
    }

    /// Rebuilds and fully re-validates the module and tensor: generator
    /// actions must be signed permutations satisfying the Clifford
    /// relations, the triples must satisfy the tensor invariants, and the
    /// two must agree slot by slot.
    pub fn to_rep(&self) -> Result<(UngradedRep, StructTensor)> {
        if self.format != FORMAT_VERSION {
            return Err(Error::InvalidRecord(format!(
                "unsupported format version {}",
                self.format
            )));
        }
        if self.m != self.k {
            return Err(Error::InvalidRecord(format!(
                "m = {} does not equal k = {}",
                self.m, self.k
            )));
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if g.target.iter().any(|&q| q == 0 || q > self.n) {
                return Err(Error::InvalidRecord(format!(
                    "generator {} has a target outside 1..={}",
                    i + 1,
                    self.n
                )));
            }
            let target: Vec<usize> = g.target.iter().map(|&q| q - 1).collect();
            let perm = SignedPerm::new(target, g.sign.clone())
                .map_err(|e| Error::InvalidRecord(format!("generator {}: {e}", i + 1)))?;
            gens.push(perm);
        }
        let rep = UngradedRep::assemble(self.k, gens, self.variant, self.provenance.clone())?;
        for (a, p, q, _) in &self.triples {
            if *a == 0 || *p == 0 || *q == 0 {
                return Err(Error::InvalidRecord("triples are 1-based".into()));
            }
        }
        let tensor = StructTensor::from_triples(
            self.m,
            self.n,
            self.triples.iter().map(|&(a, p, q, s)| (a - 1, p - 1, q - 1, s)),
        )?;
        let derived = structure_constants(&rep);
        if derived != tensor {
            return Err(Error::InvalidRecord(
                "triples disagree with the generator actions".into(),
            ));
        }
        Ok((rep, tensor))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidRecord(e.to_string()))
    }

    /// Flat CSV of the structure-constant slots.
    pub fn triples_csv(&self) -> String {
        let mut out = String::from("a,p,q,sign\n");
        for (a, p, q, s) in &self.triples {
            out.push_str(&format!("{a},{p},{q},{s}\n"));
        }
        out
    }
}
