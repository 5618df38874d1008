//! An ordered family of hypergraphs sharing one vertex set — the "colors"
//! F₁,…,F_m of a rainbow matching problem.

use crate::error::{Error, Result};
use crate::hypergraph::KPartiteHypergraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    members: Vec<KPartiteHypergraph>,
}

impl Family {
    /// All members must agree on class sizes and uniformity.
    pub fn new(members: Vec<KPartiteHypergraph>) -> Result<Self> {
        let first = members
            .first()
            .ok_or_else(|| Error::input("a family needs at least one member"))?;
        for (i, m) in members.iter().enumerate() {
            if m.class_sizes() != first.class_sizes() || m.uniformity() != first.uniformity() {
                return Err(Error::input(format!(
                    "family member {} has shape {:?}/{} but member 1 has {:?}/{}",
                    i + 1,
                    m.class_sizes(),
                    m.uniformity(),
                    first.class_sizes(),
                    first.uniformity()
                )));
            }
        }
        Ok(Family { members })
    }

    /// `count` copies of one hypergraph.
    pub fn uniform(h: KPartiteHypergraph, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::input("a family needs at least one member"));
        }
        Ok(Family { members: vec![h; count] })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, color: usize) -> &KPartiteHypergraph {
        &self.members[color]
    }

    pub fn members(&self) -> &[KPartiteHypergraph] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &KPartiteHypergraph> {
        self.members.iter()
    }

    pub fn class_sizes(&self) -> &[usize] {
        self.members[0].class_sizes()
    }

    pub fn class_count(&self) -> usize {
        self.members[0].class_count()
    }

    pub fn uniformity(&self) -> usize {
        self.members[0].uniformity()
    }
}
