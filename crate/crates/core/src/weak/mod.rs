//! The weak-order engine.

mod bitset;
mod cone;
mod element;

pub use bitset::BitSet;
pub use cone::cone_membership;
pub use element::{Element, InversionData, Side};

use crate::error::{Error, Result};

/// The join of `u` and `v` inside a finite join-closed `family`.
///
/// Returns `Ok(None)` when no member of the family lies above both, which for
/// a join-closed family containing `u` and `v` means they have no common
/// upper bound in the group at all.
pub fn join_within(family: &[Element], u: &Element, v: &Element) -> Result<Option<Element>> {
    let need = u.inversion_bits().union(v.inversion_bits());
    let uppers: Vec<&Element> = family.iter().filter(|x| need.is_subset(x.inversion_bits())).collect();
    let Some(least) = uppers.iter().min_by_key(|x| x.len()) else {
        return Ok(None);
    };
    if uppers.iter().all(|x| least.inversion_bits().is_subset(x.inversion_bits())) {
        Ok(Some((*least).clone()))
    } else {
        Err(Error::JoinAmbiguity(format!("{:?} and {:?}", u.word(), v.word())))
    }
}
