//! Versioned JSON documents.
//!
//! Every top-level document carries `"schema": "grove-kit/1"`. Coefficients
//! and polynomials travel as strings in the text format of [`crate::ring`],
//! so big integers and symbolic `b` survive a round trip.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::{Basis, BasisIndex, Expansion};
use crate::error::{Error, Result};
use crate::forest::{Composition, IndexedForest, TrimmingWord};
use crate::ring::{BetaCoeff, BetaPolynomial};
use crate::schubert::Permutation;

pub const SCHEMA: &str = "grove-kit/1";

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(s: &str) -> Result<()> {
    if s == SCHEMA {
        Ok(())
    } else {
        Err(Error::Parse(format!("unsupported schema `{s}`")))
    }
}

/// How `b` was treated when a document was produced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BetaMode {
    #[default]
    Symbolic,
    Value(i64),
}

impl BetaMode {
    pub fn apply(self, f: &BetaPolynomial) -> BetaPolynomial {
        match self {
            BetaMode::Symbolic => f.clone(),
            BetaMode::Value(c) => f.specialize_beta(c),
        }
    }

    pub fn apply_expansion(self, e: &Expansion) -> Expansion {
        match self {
            BetaMode::Symbolic => e.clone(),
            BetaMode::Value(c) => e.specialize_beta(c),
        }
    }
}

impl fmt::Display for BetaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaMode::Symbolic => f.write_str("symbolic"),
            BetaMode::Value(c) => write!(f, "{c}"),
        }
    }
}

impl FromStr for BetaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sym" | "symbolic" | "b" => Ok(BetaMode::Symbolic),
            t => t
                .parse()
                .map(BetaMode::Value)
                .map_err(|_| Error::Parse(format!("beta must be `sym` or an integer, got `{t}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestJson {
    pub word: Vec<usize>,
}

impl From<&IndexedForest> for ForestJson {
    fn from(f: &IndexedForest) -> Self {
        Self {
            word: f.to_word().0,
        }
    }
}

impl TryFrom<ForestJson> for IndexedForest {
    type Error = Error;
    fn try_from(j: ForestJson) -> Result<Self> {
        if j.word.contains(&0) {
            return Err(Error::ZeroIndex);
        }
        Ok(IndexedForest::from_word(&TrimmingWord(j.word)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermutationJson {
    pub oneline: Vec<usize>,
}

impl From<&Permutation> for PermutationJson {
    fn from(w: &Permutation) -> Self {
        Self {
            oneline: w.one_line().to_vec(),
        }
    }
}

impl TryFrom<PermutationJson> for Permutation {
    type Error = Error;
    fn try_from(j: PermutationJson) -> Result<Self> {
        Permutation::from_one_line(j.oneline)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionJson {
    pub composition: Vec<usize>,
}

/// A basis index; the key (`word`, `oneline` or `composition`) tells the kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexJson {
    Forest(ForestJson),
    Permutation(PermutationJson),
    Composition(CompositionJson),
}

impl From<&BasisIndex> for IndexJson {
    fn from(index: &BasisIndex) -> Self {
        match index {
            BasisIndex::Forest(f) => IndexJson::Forest(f.into()),
            BasisIndex::Permutation(w) => IndexJson::Permutation(w.into()),
            BasisIndex::Composition(a) => IndexJson::Composition(CompositionJson {
                composition: a.parts().to_vec(),
            }),
        }
    }
}

impl TryFrom<IndexJson> for BasisIndex {
    type Error = Error;
    fn try_from(j: IndexJson) -> Result<Self> {
        Ok(match j {
            IndexJson::Forest(f) => BasisIndex::Forest(f.try_into()?),
            IndexJson::Permutation(w) => BasisIndex::Permutation(w.try_into()?),
            IndexJson::Composition(a) => BasisIndex::Composition(Composition::new(a.composition)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub index: IndexJson,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub basis: String,
    pub beta: String,
    pub n: usize,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reconstructs: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violations: Option<Vec<IndexJson>>,
}

impl ExpansionJson {
    /// `e` is written as given; `beta` only labels it.
    pub fn new(e: &Expansion, beta: BetaMode) -> Self {
        Self {
            schema: schema(),
            basis: e.basis.name().to_string(),
            beta: beta.to_string(),
            n: e.n,
            terms: e
                .terms()
                .map(|(k, c)| TermJson {
                    index: k.into(),
                    coeff: c.to_string(),
                })
                .collect(),
            reconstructs: None,
            violations: None,
        }
    }

    pub fn into_expansion(self) -> Result<Expansion> {
        check_schema(&self.schema)?;
        let basis = Basis::from_name(&self.basis)
            .ok_or_else(|| Error::Parse(format!("unknown basis `{}`", self.basis)))?;
        let mut e = Expansion::new(basis, self.n);
        for t in self.terms {
            let c: BetaCoeff = t.coeff.parse()?;
            e.add(t.index.try_into()?, &c);
        }
        Ok(e)
    }
}

/// A single polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    #[serde(default = "schema")]
    pub schema: String,
    pub kind: String,
    pub index: IndexJson,
    pub beta: String,
    pub polynomial: String,
}

impl PolynomialJson {
    pub fn polynomial(&self) -> Result<BetaPolynomial> {
        check_schema(&self.schema)?;
        self.polynomial.parse()
    }
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

pub fn from_str<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}
