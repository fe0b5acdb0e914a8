//! The wire formats: lattices as labels plus cover pairs (with an optional
//! commutator table as `[i,j,k]` triples meaning `[i,j] = k`, unlisted pairs
//! defaulting to the bottom), congruences as blocks of labels, and rings as
//! modular/product/table descriptors. Witnesses in suite reports reuse these
//! formats so every counterexample is replayable through the CLI.

use crate::commutator::CommutatorLattice;
use crate::lattice::{FiniteLattice, LatticeCongruence};
use crate::rings::FiniteCommRing;
use crate::set::ElemSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("commutator index {0} out of range")]
    CommutatorIndex(usize),
    #[error("no commutator table present and the lattice is not distributive")]
    NoCommutator,
    #[error(transparent)]
    Lattice(#[from] crate::lattice::LatticeError),
    #[error(transparent)]
    Commutator(#[from] crate::commutator::CommutatorError),
    #[error(transparent)]
    Congruence(#[from] crate::lattice::CongruenceError),
    #[error(transparent)]
    Ring(#[from] crate::rings::RingError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeJson {
    pub labels: Vec<String>,
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub commutator: Option<Vec<(usize, usize, usize)>>,
}

impl LatticeJson {
    pub fn to_lattice(&self) -> Result<FiniteLattice, JsonError> {
        let index = |label: &str| -> Result<usize, JsonError> {
            self.labels
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| JsonError::UnknownLabel(label.to_string()))
        };
        for (i, l) in self.labels.iter().enumerate() {
            if self.labels[..i].contains(l) {
                return Err(JsonError::DuplicateLabel(l.clone()));
            }
        }
        let covers: Vec<(usize, usize)> = self
            .covers
            .iter()
            .map(|(a, b)| Ok((index(a)?, index(b)?)))
            .collect::<Result<_, JsonError>>()?;
        Ok(FiniteLattice::from_covers(self.labels.clone(), &covers)?)
    }

    /// Builds the commutator lattice: from the triples when present,
    /// otherwise the meet on a distributive carrier.
    pub fn to_commutator(&self) -> Result<CommutatorLattice, JsonError> {
        let lat = self.to_lattice()?;
        match &self.commutator {
            Some(triples) => {
                for &(i, j, k) in triples {
                    let bad = [i, j, k].into_iter().find(|&x| x >= lat.n());
                    if let Some(x) = bad {
                        return Err(JsonError::CommutatorIndex(x));
                    }
                }
                Ok(CommutatorLattice::from_triples(lat, triples)?)
            }
            None if lat.is_distributive() => Ok(CommutatorLattice::with_meet_commutator(lat)?),
            None => Err(JsonError::NoCommutator),
        }
    }

    pub fn from_lattice(lat: &FiniteLattice) -> LatticeJson {
        LatticeJson {
            labels: lat.labels().to_vec(),
            covers: lat
                .covers()
                .into_iter()
                .map(|(a, b)| (lat.label(a).to_string(), lat.label(b).to_string()))
                .collect(),
            commutator: None,
        }
    }

    pub fn from_commutator(cl: &CommutatorLattice) -> LatticeJson {
        let lat = cl.base();
        let mut triples = Vec::new();
        for x in lat.elements() {
            for y in x..lat.n() {
                let v = cl.comm(x, y);
                if v != lat.bottom() {
                    triples.push((x, y, v));
                }
            }
        }
        LatticeJson {
            commutator: Some(triples),
            ..LatticeJson::from_lattice(lat)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CongruenceJson {
    pub blocks: Vec<Vec<String>>,
}

impl CongruenceJson {
    pub fn to_congruence(&self, lat: &FiniteLattice) -> Result<LatticeCongruence, JsonError> {
        let index = |label: &str| -> Result<usize, JsonError> {
            lat.labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| JsonError::UnknownLabel(label.to_string()))
        };
        let mut blocks = Vec::new();
        for block in &self.blocks {
            let mut set = ElemSet::EMPTY;
            for label in block {
                set.insert(index(label)?);
            }
            blocks.push(set);
        }
        Ok(LatticeCongruence::from_blocks(lat, &blocks)?)
    }

    pub fn from_congruence(lat: &FiniteLattice, theta: &LatticeCongruence) -> CongruenceJson {
        CongruenceJson {
            blocks: theta
                .blocks()
                .iter()
                .map(|b| b.iter().map(|x| lat.label(x).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum RingJson {
    Zn { n: u64 },
    #[serde(rename = "product")]
    Product { factors: Vec<RingJson> },
    #[serde(rename = "table")]
    Table { add: Vec<Vec<usize>>, mul: Vec<Vec<usize>> },
}

impl RingJson {
    pub fn to_ring(&self) -> Result<FiniteCommRing, JsonError> {
        match self {
            RingJson::Zn { n } => Ok(FiniteCommRing::zn(*n)?),
            RingJson::Product { factors } => {
                let built: Vec<FiniteCommRing> =
                    factors.iter().map(|f| f.to_ring()).collect::<Result<_, _>>()?;
                let refs: Vec<&FiniteCommRing> = built.iter().collect();
                Ok(FiniteCommRing::product(&refs)?)
            }
            RingJson::Table { add, mul } => Ok(FiniteCommRing::from_tables(add.clone(), mul.clone())?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_roundtrip() {
        let text = r#"{"labels": ["0","a","1"], "covers": [["0","a"],["a","1"]]}"#;
        let parsed: LatticeJson = serde_json::from_str(text).unwrap();
        let lat = parsed.to_lattice().unwrap();
        assert!(lat.is_isomorphic(&FiniteLattice::chain(3)));
        let back = LatticeJson::from_lattice(&lat);
        assert!(back.to_lattice().unwrap().is_isomorphic(&lat));
    }

    #[test]
    fn commutator_extension() {
        let text = r#"{"labels": ["0","a","1"], "covers": [["0","a"],["a","1"]],
                       "commutator": [[2,2,1]]}"#;
        let parsed: LatticeJson = serde_json::from_str(text).unwrap();
        let cl = parsed.to_commutator().unwrap();
        assert_eq!(cl.comm(2, 2), 1);
        assert_eq!(cl.comm(1, 2), 0);
        let back = LatticeJson::from_commutator(&cl);
        assert_eq!(back.commutator, Some(vec![(2, 2, 1)]));
        // no table falls back to the meet on a distributive carrier
        let plain = LatticeJson::from_lattice(cl.base());
        assert!(plain.to_commutator().unwrap().is_meet());
        // ... but not on the diamond
        let m3 = LatticeJson::from_lattice(&FiniteLattice::diamond());
        assert!(matches!(m3.to_commutator(), Err(JsonError::NoCommutator)));
    }

    #[test]
    fn congruence_blocks() {
        let lat = FiniteLattice::chain(3);
        let text = r#"{"blocks": [["0","1"],["2"]]}"#;
        let parsed: CongruenceJson = serde_json::from_str(text).unwrap();
        let theta = parsed.to_congruence(&lat).unwrap();
        assert_eq!(theta.num_blocks(), 2);
        let back = CongruenceJson::from_congruence(&lat, &theta);
        assert_eq!(back.blocks, vec![vec!["0", "1"], vec!["2"]]);
    }

    #[test]
    fn ring_descriptors() {
        let zn: RingJson = serde_json::from_str(r#"{"type":"Zn","n":12}"#).unwrap();
        assert_eq!(zn.to_ring().unwrap().n(), 12);
        let prod: RingJson = serde_json::from_str(
            r#"{"type":"product","factors":[{"type":"Zn","n":2},{"type":"Zn","n":3}]}"#,
        )
        .unwrap();
        let ring = prod.to_ring().unwrap();
        assert_eq!(ring.n(), 6);
        let table: RingJson = serde_json::from_str(
            r#"{"type":"table","add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]}"#,
        )
        .unwrap();
        assert_eq!(table.to_ring().unwrap().n(), 2);
    }
}
