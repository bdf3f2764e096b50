//! SUSY chains over the oscillator: state-adding (Darboux–Crum) and
//! state-deleting (Krein–Adler) constructions, the partner Hamiltonian, its
//! exact eigenstates and the ladder operators built from intertwiners.

pub mod chain;
pub mod ladder;
pub mod partner;
pub mod reference;
pub mod verify;

use std::collections::BTreeMap;

use num_rational::BigRational;

pub use chain::{build_adding_chain, build_deleting_chain, ChainData, ChainKind};
pub use ladder::{build_ladder, LadderName, LadderOperator};
pub use partner::{partner_potential, partner_state, EigenState, PartnerSystem};
pub use verify::{verify_all, CheckRecord, CheckStatus, Report};

use crate::error::{Error, Result};

/// Seeds of the four-step extension.
pub const STANDARD_SEEDS: [i64; 4] = [2, 3, 4, 5];
/// Lower of the two oscillator levels removed by the deleting chain.
pub const STANDARD_DELETED_LEVEL: i64 = 4;

/// Both chains of one rational extension together with their partner systems.
#[derive(Clone, Debug)]
pub struct SusyModel {
    pub adding: ChainData,
    pub deleting: ChainData,
    pub partner: PartnerSystem,
    pub deleting_partner: PartnerSystem,
    /// `V_deleting - V_adding`.
    pub offset: BigRational,
}

impl SusyModel {
    pub fn new(seeds: &[i64], deleted_level: i64) -> Result<Self> {
        let adding = build_adding_chain(seeds)?;
        let deleting = build_deleting_chain(deleted_level)?;
        let partner = partner_potential(&adding);
        let deleting_partner = partner_potential(&deleting);
        let offset = ladder::chain_offset(&partner, &deleting_partner)?;
        Ok(SusyModel {
            adding,
            deleting,
            partner,
            deleting_partner,
            offset,
        })
    }

    /// Seeds `{2,3,4,5}`, deleted levels `{4,5}`.
    pub fn standard() -> Self {
        Self::new(&STANDARD_SEEDS, STANDARD_DELETED_LEVEL).expect("standard model is regular")
    }

    pub fn state(&self, nu: i64) -> Result<EigenState> {
        partner_state(&self.adding, nu)
    }

    pub fn ladder(&self, name: LadderName) -> LadderOperator {
        build_ladder(name, &self.adding, &self.deleting, &self.offset)
    }

    /// Added levels `-m-1` (ascending) followed by `0..=max_nu`.
    pub fn levels(&self, max_nu: i64) -> Vec<i64> {
        let mut v: Vec<i64> = self.adding.seeds.iter().rev().map(|m| -m - 1).collect();
        v.extend(0..=max_nu);
        v
    }

    /// Levels of the truncated (half-line) system: odd `ν`.
    pub fn truncated_levels(&self, max_nu: i64) -> Vec<i64> {
        self.levels(max_nu).into_iter().filter(|n| n.rem_euclid(2) == 1).collect()
    }

    /// Exact states for every index in `nus`, built in parallel.
    pub fn states(&self, nus: &[i64]) -> Result<StateTable> {
        let built = crate::par::map(nus, |&nu| self.state(nu));
        let mut map = BTreeMap::new();
        for s in built {
            let s = s?;
            map.insert(s.nu, s);
        }
        Ok(StateTable(map))
    }
}

/// Exact partner eigenstates keyed by `ν`.
#[derive(Clone, Debug, Default)]
pub struct StateTable(pub BTreeMap<i64, EigenState>);

impl StateTable {
    pub fn get(&self, nu: i64) -> Result<&EigenState> {
        self.0.get(&nu).ok_or(Error::NoSuchLevel(nu))
    }

    pub fn contains(&self, nu: i64) -> bool {
        self.0.contains_key(&nu)
    }

    pub fn indices(&self) -> Vec<i64> {
        self.0.keys().copied().collect()
    }
}
