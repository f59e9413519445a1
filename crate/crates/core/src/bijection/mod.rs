//! Recursive bijections between forests with `k - 1` and `k` roots.
//!
//! Each family has a forward map that splits one tree off (returning the
//! smaller-root-count forest together with the choice that undoes the
//! split) and an inverse map that takes a choice index in
//! `1..=choice_count`. Choices are ordered canonically: attachment targets
//! outside the moved tree first, by ascending label (then gap position, or
//! color), followed by targets inside the moved tree in the same order.
//! Inside-targets are the label-swap case and are recorded in the labels of
//! the larger-root-count forest.

mod colored;
mod leafplane;
mod partite;
mod plain;
mod plane;

use std::fmt;

use serde::Serialize;

pub use colored::{colored_choice_count, colored_forward, colored_inverse};
pub use leafplane::{leafplane_choice_count, leafplane_forward, leafplane_inverse};
pub use partite::{
    partite_choice_count, partite_forward, partite_inverse, reroot_switch, reroot_switch_back,
    PartiteChain,
};
pub use plain::{plain_choice_count, plain_forward, plain_inverse};
pub use plane::{plane_choice_count, plane_forward, plane_inverse};

/// A 1-based index into the ordered list of inverse-step choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChoiceIndex(pub usize);

impl ChoiceIndex {
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for ChoiceIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn check_choice(c: ChoiceIndex, count: usize) -> crate::Result<usize> {
    if c.0 == 0 || c.0 > count {
        Err(crate::Error::ChoiceOutOfRange { choice: c.0, count })
    } else {
        Ok(c.0 - 1)
    }
}
