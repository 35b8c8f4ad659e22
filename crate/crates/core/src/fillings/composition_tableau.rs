//! Set-valued composition tableaux: no basement, first column strictly
//! increasing from top to bottom, otherwise the same rules as skyline
//! fillings (triples only among columns `≥ 1`).

use super::enumerate::enumerate_set_fillings;
use super::{Basement, SetFilling};
use crate::composition::WeakComposition;

pub fn is_semistandard_composition_tableau(f: &SetFilling) -> bool {
    if !matches!(f.basement(), Basement::Absent) || f.inner().is_some() {
        return false;
    }
    if f.shape().parts().contains(&0) {
        return false;
    }
    let first: Vec<usize> = f.rows().iter().map(|r| r[0].anchor()).collect();
    first.windows(2).all(|w| w[0] < w[1])
        && f.columns_distinct()
        && f.rows_decreasing()
        && f.anchor_triples_are_inversions(false)
        && f.free_entries_highest()
}

/// `SetCompTab(α)` with entries at most `n`.
pub fn enumerate_composition_tableaux(alpha: &WeakComposition, n: usize) -> Vec<SetFilling> {
    assert!(!alpha.parts().contains(&0), "composition tableaux need positive parts");
    enumerate_set_fillings(alpha, &Basement::Absent, n)
}
