use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::chain::ChainData;
use super::partner::PartnerSystem;
use crate::error::{Error, Result};
use crate::exactfn::{apply_product, q, FirstOrderOperator, GaussRational};

/// The twelve ladder operators of the untruncated and truncated partner systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LadderName {
    C,
    CDag,
    L,
    LDag,
    LBar,
    LBarDag,
    CTilde,
    CTildeDag,
    LTilde,
    LTildeDag,
    LBarTilde,
    LBarTildeDag,
}

impl LadderName {
    pub const ALL: [LadderName; 12] = [
        LadderName::C,
        LadderName::CDag,
        LadderName::L,
        LadderName::LDag,
        LadderName::LBar,
        LadderName::LBarDag,
        LadderName::CTilde,
        LadderName::CTildeDag,
        LadderName::LTilde,
        LadderName::LTildeDag,
        LadderName::LBarTilde,
        LadderName::LBarTildeDag,
    ];

    /// The lowering member of each pair.
    pub const LOWERING: [LadderName; 6] = [
        LadderName::C,
        LadderName::L,
        LadderName::LBar,
        LadderName::CTilde,
        LadderName::LTilde,
        LadderName::LBarTilde,
    ];

    pub fn symbol(self) -> &'static str {
        use LadderName::*;
        match self {
            C => "C",
            CDag => "C†",
            L => "L",
            LDag => "L†",
            LBar => "L̄",
            LBarDag => "L̄†",
            CTilde => "C̃",
            CTildeDag => "C̃†",
            LTilde => "L̃",
            LTildeDag => "L̃†",
            LBarTilde => "L̄̃",
            LBarTildeDag => "L̄̃†",
        }
    }

    pub fn ascii(self) -> &'static str {
        use LadderName::*;
        match self {
            C => "C",
            CDag => "Cdag",
            L => "L",
            LDag => "Ldag",
            LBar => "Lbar",
            LBarDag => "Lbardag",
            CTilde => "Ctilde",
            CTildeDag => "Ctildedag",
            LTilde => "Ltilde",
            LTildeDag => "Ltildedag",
            LBarTilde => "Lbartilde",
            LBarTildeDag => "Lbartildedag",
        }
    }

    pub fn adjoint(self) -> Self {
        use LadderName::*;
        match self {
            C => CDag,
            CDag => C,
            L => LDag,
            LDag => L,
            LBar => LBarDag,
            LBarDag => LBar,
            CTilde => CTildeDag,
            CTildeDag => CTilde,
            LTilde => LTildeDag,
            LTildeDag => LTilde,
            LBarTilde => LBarTildeDag,
            LBarTildeDag => LBarTilde,
        }
    }

    pub fn is_lowering(self) -> bool {
        Self::LOWERING.contains(&self)
    }

    /// Acts on the truncated (half-line) system.
    pub fn is_truncated(self) -> bool {
        use LadderName::*;
        matches!(
            self,
            CTilde | CTildeDag | LTilde | LTildeDag | LBarTilde | LBarTildeDag
        )
    }
}

impl fmt::Display for LadderName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Serialize for LadderName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

impl FromStr for LadderName {
    type Err = Error;

    /// Accepts the Unicode symbol or the ASCII alias (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        LadderName::ALL
            .into_iter()
            .find(|n| n.symbol() == t || n.ascii().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

/// Composite operator written left to right: `factors[0]` acts last.
#[derive(Clone, Debug)]
pub struct LadderOperator {
    pub name: LadderName,
    pub factors: Vec<FirstOrderOperator>,
    /// `λ > 0`; lowering operators shift the energy by `-λ`, raising by `+λ`.
    pub energy_step: BigRational,
}

impl LadderOperator {
    pub fn apply(&self, f: &GaussRational) -> GaussRational {
        apply_product(&self.factors, f)
    }

    pub fn order(&self) -> usize {
        self.factors.len()
    }

    pub fn is_lowering(&self) -> bool {
        self.name.is_lowering()
    }

    /// Signed energy change produced on an eigenfunction.
    pub fn energy_change(&self) -> BigRational {
        if self.is_lowering() {
            -self.energy_step.clone()
        } else {
            self.energy_step.clone()
        }
    }

    /// Change of the level index `ν` (energies are `2ν + 1`).
    pub fn index_change(&self) -> i64 {
        let d = self.energy_change() / q(2);
        assert!(d.is_integer(), "energy step must be even");
        i64::try_from(d.to_integer()).expect("small step")
    }
}

/// Constant `c` with `V_deleting = V_adding + c`.
pub fn chain_offset(adding: &PartnerSystem, deleting: &PartnerSystem) -> Result<BigRational> {
    let d = &deleting.potential_extension - &adding.potential_extension;
    let n = d.numer();
    if d.is_polynomial() && n.degree().unwrap_or(0) == 0 {
        Ok(n.coeff(0))
    } else {
        Err(Error::InvalidArgument(
            "deleting and adding partners are not shifted copies".into(),
        ))
    }
}

/// Factor list and energy step for `name`.
///
/// With `A` the adding composite, `Ā` the deleting composite and `c` the
/// offset between the two partner potentials:
/// `C = Ā A†` (`λ = c`), `L = A a A†`, `L̄ = Ā a Ā†` (`λ = 2`),
/// `L̃ = A a² A†`, `L̄̃ = Ā a² Ā†` (`λ = 4`), `C̃ = C`.
pub fn build_ladder(
    name: LadderName,
    adding: &ChainData,
    deleting: &ChainData,
    offset: &BigRational,
) -> LadderOperator {
    use LadderName::*;
    let a = adding.composite();
    let ad = adding.composite_adjoint();
    let b = deleting.composite();
    let bd = deleting.composite_adjoint();
    let low = FirstOrderOperator::annihilator();
    let up = FirstOrderOperator::creator();
    let cat = |parts: &[&[FirstOrderOperator]]| parts.concat();
    let (factors, step) = match name {
        C | CTilde => (cat(&[&b, &ad]), offset.clone()),
        CDag | CTildeDag => (cat(&[&a, &bd]), offset.clone()),
        L => (cat(&[&a, &[low], &ad]), q(2)),
        LDag => (cat(&[&a, &[up], &ad]), q(2)),
        LBar => (cat(&[&b, &[low], &bd]), q(2)),
        LBarDag => (cat(&[&b, &[up], &bd]), q(2)),
        LTilde => (cat(&[&a, &[low.clone(), low], &ad]), q(4)),
        LTildeDag => (cat(&[&a, &[up.clone(), up], &ad]), q(4)),
        LBarTilde => (cat(&[&b, &[low.clone(), low], &bd]), q(4)),
        LBarTildeDag => (cat(&[&b, &[up.clone(), up], &bd]), q(4)),
    };
    LadderOperator {
        name,
        factors,
        energy_step: step,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_both_ways() {
        for n in LadderName::ALL {
            assert_eq!(n.symbol().parse::<LadderName>().unwrap(), n);
            assert_eq!(n.ascii().parse::<LadderName>().unwrap(), n);
            assert_eq!(n.adjoint().adjoint(), n);
            assert_ne!(n.is_lowering(), n.adjoint().is_lowering());
        }
        assert_eq!("lbar".parse::<LadderName>().unwrap(), LadderName::LBar);
        assert_eq!(
            "K".parse::<LadderName>().unwrap_err(),
            Error::UnknownOperator("K".into())
        );
    }
}
