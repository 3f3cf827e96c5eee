//! Noncommutative words in the curvature jets `R_u^(k)`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

/// A single symbolic factor: either the identity on `u^⊥` or the `k`-th
/// radial covariant derivative `R_u^(k)` of the Jacobi operator at `r = 0`.
///
/// Both act on the `(n-1)`-dimensional space `u^⊥`; `R_u^(k)` annihilates
/// `u`, and `I_u` is the multiplicative unit there.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum JetSymbol {
    /// `R_u^(k)`; ordered by jet order, ahead of the identity.
    CurvatureJet(u32),
    /// `I_u`; never stored inside a word (the empty word is the unit).
    IdentityOnUPerp,
}

impl JetSymbol {
    pub fn render(&self) -> String {
        match self {
            JetSymbol::IdentityOnUPerp => String::from("I"),
            JetSymbol::CurvatureJet(k) => match k {
                0 => String::from("R"),
                1 => String::from("R'"),
                2 => String::from("R''"),
                3 => String::from("R'''"),
                k => {
                    let mut s = String::new();
                    let _ = write!(s, "R^({k})");
                    s
                }
            },
        }
    }
}

/// An ordered product of curvature jets. The empty word is the unit `I_u`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct EndoWord {
    factors: Vec<JetSymbol>,
}

impl EndoWord {
    /// The unit word `I_u`.
    pub fn unit() -> Self {
        EndoWord { factors: Vec::new() }
    }

    /// The single factor `R_u^(k)`.
    pub fn jet(k: u32) -> Self {
        EndoWord {
            factors: vec![JetSymbol::CurvatureJet(k)],
        }
    }

    pub fn from_jets(orders: &[u32]) -> Self {
        EndoWord {
            factors: orders.iter().map(|&k| JetSymbol::CurvatureJet(k)).collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[JetSymbol] {
        &self.factors
    }

    /// Concatenation; identity factors are absorbed.
    pub fn concat(&self, other: &EndoWord) -> EndoWord {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        factors.extend_from_slice(&self.factors);
        factors.extend_from_slice(&other.factors);
        EndoWord { factors }
    }

    /// Jet orders of the factors, for pattern matching in trace reduction.
    pub fn jet_orders(&self) -> Option<Vec<u32>> {
        self.factors
            .iter()
            .map(|f| match f {
                JetSymbol::CurvatureJet(k) => Some(*k),
                JetSymbol::IdentityOnUPerp => None,
            })
            .collect()
    }

    /// Lexicographically minimal rotation; canonical representative of the
    /// cyclic equivalence class (used under traces).
    pub fn cyclic_normal_form(&self) -> EndoWord {
        let m = self.factors.len();
        if m <= 1 {
            return self.clone();
        }
        let mut best: Option<Vec<JetSymbol>> = None;
        for start in 0..m {
            let rotated: Vec<JetSymbol> = (0..m).map(|i| self.factors[(start + i) % m]).collect();
            match &best {
                Some(b) if *b <= rotated => {}
                _ => best = Some(rotated),
            }
        }
        EndoWord {
            factors: best.unwrap(),
        }
    }

    pub fn render(&self) -> String {
        if self.is_unit() {
            return String::from("I");
        }
        let mut s = String::new();
        for (i, f) in self.factors.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&f.render());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_normal_form_picks_minimal_rotation() {
        // R' R < R R' is false lexicographically: Jet(0) < Jet(1), so R R'.
        let w = EndoWord::from_jets(&[1, 0]);
        assert_eq!(w.cyclic_normal_form(), EndoWord::from_jets(&[0, 1]));
        let w = EndoWord::from_jets(&[2, 0, 0]);
        assert_eq!(w.cyclic_normal_form(), EndoWord::from_jets(&[0, 0, 2]));
    }

    #[test]
    fn unit_absorbed_in_concat() {
        let w = EndoWord::jet(3);
        assert_eq!(EndoWord::unit().concat(&w), w);
        assert_eq!(w.concat(&EndoWord::unit()), w);
    }

    #[test]
    fn render_jet_names() {
        assert_eq!(EndoWord::from_jets(&[0, 1, 4]).render(), "R R' R^(4)");
        assert_eq!(EndoWord::unit().render(), "I");
    }
}
