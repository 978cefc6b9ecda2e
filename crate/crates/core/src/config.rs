//! Search budgets and the registry of precomputed verdicts.

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::hall::PiSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Backtrack nodes per search.
    pub nodes: u64,
    /// Largest group order the exhaustive routines will enumerate.
    pub order: u128,
    /// Largest coset action built for quotients.
    pub index: usize,
    /// Largest section `A/B` acted on element-wise.
    pub section: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: crate::search::DEFAULT_NODE_BUDGET,
            order: crate::table::DEFAULT_ORDER_BUDGET,
            index: crate::hom::DEFAULT_INDEX_BUDGET,
            section: 10_000,
        }
    }
}

/// A verdict established outside the generic machinery (by a dedicated
/// construction) for a group too large for the exhaustive routines.
#[derive(Clone, Debug)]
pub struct SpecialCase {
    pub group: PermGroup,
    pub pi: PiSet,
    pub cpi: bool,
    pub hall: Option<PermGroup>,
    pub note: String,
}

#[derive(Clone, Debug, Default)]
pub struct Ctx {
    pub budget: Budget,
    pub seed: u64,
    special: Vec<SpecialCase>,
}

impl Ctx {
    pub fn new(budget: Budget, seed: u64) -> Ctx {
        Ctx {
            budget,
            seed,
            special: Vec::new(),
        }
    }

    pub fn register(&mut self, case: SpecialCase) {
        self.special.push(case);
    }

    /// The registered case for exactly this group (same permutations) and π.
    pub fn special_case(&self, g: &PermGroup, pi: &PiSet) -> Option<&SpecialCase> {
        self.special.iter().find(|c| {
            &c.pi == pi
                && c.group.degree() == g.degree()
                && c.group.order_u128() == g.order_u128()
                && c.group.same_group(g)
        })
    }
}
