//! Operators on `Z[b][x1, x2, ...]`.
//!
//! An [`Operator`] is a word of [`OperatorLetter`]s. In a displayed product
//! the rightmost letter acts first, both in [`Operator::apply`] and in the
//! text notation (`"TL2 TR3 TL2"` applies `TL2`, then `TR3`, then `TL2`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::{ExtractorWord, IndexedForest, Side};
use crate::ring::BetaPolynomial;
use crate::schubert::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpKind {
    /// Divided difference `(1 - s_i) / (x_i - x_{i+1})`.
    Partial,
    /// Isobaric divided difference `Partial_i (1 + b x_{i+1})`.
    Pi,
    /// `b + Pi_i`.
    PiHat,
    /// `x_i -> 0` with later variables shifted down.
    R,
    /// Quasisymmetric divided difference `(R_{i+1} - R_i) / x_i`.
    T,
    /// `T_i (1 + b x_{i+1})`.
    TK,
    /// `T_i`, left extractor letter.
    TL,
    /// `(1 + b x_i) T_i`, right extractor letter.
    TR,
}

impl OpKind {
    fn symbol(self) -> &'static str {
        match self {
            OpKind::Partial => "D",
            OpKind::Pi => "P",
            OpKind::PiHat => "PH",
            OpKind::R => "R",
            OpKind::T => "T",
            OpKind::TK => "TK",
            OpKind::TL => "TL",
            OpKind::TR => "TR",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperatorLetter {
    pub kind: OpKind,
    pub position: usize,
}

impl OperatorLetter {
    pub fn new(kind: OpKind, position: usize) -> Self {
        assert!(position >= 1, "operator positions start at 1");
        Self { kind, position }
    }

    pub fn apply(&self, f: &BetaPolynomial) -> BetaPolynomial {
        let i = self.position;
        match self.kind {
            OpKind::Partial => divided_difference(f, i),
            OpKind::Pi => divided_difference(&(f * &BetaPolynomial::one_plus_beta_x(i + 1)), i),
            OpKind::PiHat => {
                let pi = OperatorLetter::new(OpKind::Pi, i).apply(f);
                &pi + &f.scale(&crate::ring::BetaCoeff::beta_pow(1))
            }
            OpKind::R => f.substitute_zero_and_shift(i),
            OpKind::T | OpKind::TL => quasisymmetric_difference(f, i),
            OpKind::TK => {
                quasisymmetric_difference(&(f * &BetaPolynomial::one_plus_beta_x(i + 1)), i)
            }
            OpKind::TR => {
                &BetaPolynomial::one_plus_beta_x(i) * &quasisymmetric_difference(f, i)
            }
        }
    }
}

fn divided_difference(f: &BetaPolynomial, i: usize) -> BetaPolynomial {
    (f - &f.swap_variables(i))
        .exact_divide_by_difference(i)
        .expect("f - s_i f is divisible by x_i - x_{i+1}")
}

fn quasisymmetric_difference(f: &BetaPolynomial, i: usize) -> BetaPolynomial {
    (&f.substitute_zero_and_shift(i + 1) - &f.substitute_zero_and_shift(i))
        .exact_divide_by_var(i)
        .expect("R_{i+1} f - R_i f is divisible by x_i")
}

impl fmt::Display for OperatorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.symbol(), self.position)
    }
}

impl FromStr for OperatorLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let split = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (head, tail) = s.split_at(split);
        let kind = match head {
            "D" => OpKind::Partial,
            "P" => OpKind::Pi,
            "PH" => OpKind::PiHat,
            "R" => OpKind::R,
            "T" => OpKind::T,
            "TK" => OpKind::TK,
            "TL" => OpKind::TL,
            "TR" => OpKind::TR,
            _ => return Err(Error::Parse(format!("unknown operator `{s}`"))),
        };
        match tail.parse::<usize>() {
            Ok(0) => Err(Error::ZeroIndex),
            Ok(i) => Ok(OperatorLetter::new(kind, i)),
            Err(_) => Err(Error::Parse(format!("bad operator position in `{s}`"))),
        }
    }
}

/// A composite operator; `letters[0]` is the leftmost factor.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Operator {
    letters: Vec<OperatorLetter>,
}

impl Operator {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<OperatorLetter>) -> Self {
        Self { letters }
    }

    pub fn letter(kind: OpKind, position: usize) -> Self {
        Self::from_letters(vec![OperatorLetter::new(kind, position)])
    }

    /// `kind_{i1} kind_{i2} ... kind_{ik}` for a word `i1 ... ik`.
    pub fn word(kind: OpKind, word: &[usize]) -> Self {
        Self::from_letters(word.iter().map(|&i| OperatorLetter::new(kind, i)).collect())
    }

    pub fn letters(&self) -> &[OperatorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self * other`: `other` acts first.
    pub fn then_after(&self, other: &Operator) -> Operator {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn apply(&self, f: &BetaPolynomial) -> BetaPolynomial {
        let mut g = f.clone();
        for letter in self.letters.iter().rev() {
            if g.is_zero() {
                break;
            }
            g = letter.apply(&g);
        }
        g
    }

    /// Every intermediate value, starting with `f` itself.
    pub fn apply_steps(&self, f: &BetaPolynomial) -> Vec<(Option<OperatorLetter>, BetaPolynomial)> {
        let mut out = vec![(None, f.clone())];
        let mut g = f.clone();
        for letter in self.letters.iter().rev() {
            g = letter.apply(&g);
            out.push((Some(*letter), g.clone()));
        }
        out
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let s: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(" "))
    }
}

impl FromStr for Operator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" {
            return Ok(Self::identity());
        }
        s.split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<_>>>()
            .map(Self::from_letters)
    }
}

/// `D_w`, `P_w` or `PH_w` along the canonical reduced word of `w`.
pub fn compose_perm(kind: OpKind, w: &Permutation) -> Operator {
    assert!(
        matches!(kind, OpKind::Partial | OpKind::Pi | OpKind::PiHat),
        "permutation composites use D, P or PH"
    );
    Operator::word(kind, &w.reduced_word())
}

/// `T_F` along the canonical trimming word of `F`.
pub fn compose_forest_t(forest: &IndexedForest) -> Operator {
    Operator::word(OpKind::T, forest.to_word().letters())
}

/// The grove extractor of an extractor word.
pub fn compose_extractor(word: &ExtractorWord) -> Operator {
    Operator::from_letters(
        word.letters()
            .iter()
            .map(|l| {
                let kind = match l.side {
                    Side::L => OpKind::TL,
                    Side::R => OpKind::TR,
                };
                OperatorLetter::new(kind, l.position)
            })
            .collect(),
    )
}

/// `H_F`, the grove extractor of a forest.
pub fn grove_extractor(forest: &IndexedForest) -> Operator {
    compose_extractor(&forest.extractor_word())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BetaPolynomial {
        s.parse().unwrap()
    }

    fn op(s: &str) -> Operator {
        s.parse().unwrap()
    }

    #[test]
    fn single_letter_examples() {
        assert_eq!(op("D1").apply(&p("x1")), p("1"));
        assert_eq!(op("T2").apply(&p("x1 + x2")), p("1"));
        assert!(op("T1").apply(&p("x1 + x2")).is_zero());
        assert_eq!(op("P1").apply(&p("x1")), p("1"));
        let f = p("x2^2 - x1^2*x2 + x1*x2 + x2 - x1^2 + x1");
        assert_eq!(op("TL1").apply(&f).specialize_beta(1), p("-2*x1"));
    }

    #[test]
    fn permutation_composites() {
        let id = Permutation::identity();
        assert!(compose_perm(OpKind::Partial, &id).is_empty());
        // D1 D2 (x1^2 x2): D2 gives x1^2, D1 gives x1 + x2
        assert_eq!(op("D1 D2").apply(&p("x1^2*x2")), p("x1 + x2"));
        let s1 = Permutation::simple(1);
        let g = crate::schubert::grothendieck(&s1);
        assert_eq!(compose_perm(OpKind::PiHat, &s1).apply(&g).constant_term().to_string(), "1");
    }

    #[test]
    fn notation_round_trips() {
        let o = op("D1 P2 PH3 R4 T5 TK6 TL7 TR8");
        assert_eq!(o.to_string(), "D1 P2 PH3 R4 T5 TK6 TL7 TR8");
        assert_eq!(op("id"), Operator::identity());
        assert!("Q1".parse::<Operator>().is_err());
        assert!("T0".parse::<Operator>().is_err());
        assert!("T".parse::<Operator>().is_err());
    }

    #[test]
    fn forest_composite_dual_to_generator() {
        for i in 1..5 {
            let g = IndexedForest::generator(i);
            let poly = (1..=i).fold(BetaPolynomial::zero(), |acc, j| acc + BetaPolynomial::var(j));
            assert_eq!(compose_forest_t(&g).apply(&poly), BetaPolynomial::one());
        }
        assert!(compose_forest_t(&IndexedForest::empty()).is_empty());
    }

    #[test]
    fn rightmost_letter_acts_first() {
        // R1 then T1 differs from T1 then R1
        let f = p("x1*x2 + x2^2");
        assert_eq!(op("T1 R1").apply(&f), op("T1").apply(&op("R1").apply(&f)));
        assert_ne!(op("T1 R1").apply(&f), op("R1 T1").apply(&f));
    }
}
