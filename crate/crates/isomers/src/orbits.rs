//! Orbit spaces of tabloids under a permutation group, with two independent
//! counting routes: direct orbit enumeration and the census-weighted
//! fixed-point average.
//!
//! The two routes must always agree; `burnside_count` reports an internal
//! inconsistency when the weighted sum fails to divide evenly, since that can
//! only come from a census or fixed-count bug.

use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::partition::{partitions_of, Partition};
use crate::perm::CycleType;
use crate::tabloid::{enumerate_tabloids, Tabloid};

/// One orbit of tabloids: the sorted member list and its least member as the
/// representative.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orbit {
    members: Vec<Tabloid>,
}

impl Orbit {
    /// The lexicographically least member.
    pub fn representative(&self) -> &Tabloid {
        &self.members[0]
    }

    /// All members, sorted.
    pub fn members(&self) -> &[Tabloid] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, tabloid: &Tabloid) -> bool {
        self.members.binary_search(tabloid).is_ok()
    }
}

/// The complete orbit decomposition of the tabloids of one shape.
///
/// Orbits are sorted by representative and labelled `a, b, c, …` in that
/// order.
#[derive(Clone, Debug)]
pub struct OrbitSpace {
    shape: Partition,
    group: PermGroup,
    orbits: Vec<Orbit>,
}

impl OrbitSpace {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Number of orbits.
    pub fn count(&self) -> usize {
        self.orbits.len()
    }

    /// Label of the orbit at `index`: `a`–`z`, then `aa`, `ab`, ….
    pub fn label(&self, index: usize) -> String {
        orbit_label(index)
    }

    /// Index of the orbit containing `tabloid`, if it has the right shape.
    pub fn orbit_index_of(&self, tabloid: &Tabloid) -> Option<usize> {
        self.orbits.iter().position(|orbit| orbit.contains(tabloid))
    }

    /// Map from every tabloid of the shape to its orbit index.
    pub fn membership_map(&self) -> HashMap<Tabloid, usize> {
        let mut map = HashMap::new();
        for (index, orbit) in self.orbits.iter().enumerate() {
            for member in orbit.members() {
                map.insert(member.clone(), index);
            }
        }
        map
    }
}

impl Serialize for OrbitSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct OrbitRow<'a> {
            label: String,
            size: usize,
            representative: &'a Tabloid,
            members: &'a [Tabloid],
        }
        let rows: Vec<OrbitRow<'_>> = self
            .orbits
            .iter()
            .enumerate()
            .map(|(i, orbit)| OrbitRow {
                label: orbit_label(i),
                size: orbit.size(),
                representative: orbit.representative(),
                members: orbit.members(),
            })
            .collect();
        let mut s = serializer.serialize_struct("OrbitSpace", 4)?;
        s.serialize_field("shape", &self.shape)?;
        s.serialize_field("group", &self.group)?;
        s.serialize_field("count", &self.count())?;
        s.serialize_field("orbits", &rows)?;
        s.end()
    }
}

/// Bijective base-26 label: `a`, `b`, …, `z`, `aa`, `ab`, ….
pub fn orbit_label(index: usize) -> String {
    let mut n = index + 1;
    let mut out = Vec::new();
    while n > 0 {
        n -= 1;
        out.push(b'a' + (n % 26) as u8);
        n /= 26;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// Decomposes the tabloids of `shape` into orbits under `group`.
pub fn orbit_space(group: &PermGroup, shape: &Partition) -> Result<OrbitSpace> {
    if group.degree() != shape.degree() {
        return Err(Error::DegreeMismatch {
            expected: shape.degree(),
            found: group.degree(),
        });
    }
    let all = enumerate_tabloids(shape);
    let mut index_of: HashMap<&Tabloid, usize> =
        all.iter().enumerate().map(|(i, t)| (t, i)).collect();
    index_of.shrink_to_fit();
    let mut visited = vec![false; all.len()];
    let mut orbits = Vec::new();
    for (start, tabloid) in all.iter().enumerate() {
        if visited[start] {
            continue;
        }
        let mut members: Vec<Tabloid> = group
            .elements()
            .iter()
            .map(|g| tabloid.act(g))
            .collect();
        members.sort_unstable();
        members.dedup();
        for member in &members {
            visited[index_of[member]] = true;
        }
        debug_assert_eq!(group.order() % members.len(), 0);
        orbits.push(Orbit { members });
    }
    // the sweep visits representatives in lexicographic order already
    Ok(OrbitSpace {
        shape: shape.clone(),
        group: group.clone(),
        orbits,
    })
}

/// Number of tabloids of shape `shape` fixed by any permutation of cycle type
/// `cycle_type`.
///
/// A permutation fixes a tabloid exactly when every component is a union of
/// whole cycles, so the count is the number of ways to deal the cycles onto
/// the components with the right size sums.
pub fn fixed_tabloid_count(cycle_type: &CycleType, shape: &Partition) -> u64 {
    assert_eq!(
        cycle_type.degree(),
        shape.degree(),
        "cycle type and shape must partition the same degree"
    );
    fn rec(cycles: &[usize], remaining: &mut [usize]) -> u64 {
        match cycles.split_first() {
            None => 1,
            Some((&len, rest)) => {
                let mut total = 0;
                for i in 0..remaining.len() {
                    if remaining[i] >= len {
                        remaining[i] -= len;
                        total += rec(rest, remaining);
                        remaining[i] += len;
                    }
                }
                total
            }
        }
    }
    let mut capacities: Vec<usize> = shape.parts().to_vec();
    rec(cycle_type.parts(), &mut capacities)
}

/// Orbit count through the census-weighted fixed-point average:
/// `(1/|G|) Σ_ρ g_ρ · fix(ρ, λ)`.
pub fn burnside_count(group: &PermGroup, shape: &Partition) -> Result<u64> {
    if group.degree() != shape.degree() {
        return Err(Error::DegreeMismatch {
            expected: shape.degree(),
            found: group.degree(),
        });
    }
    let census = group.cycle_census();
    let mut weighted = 0u64;
    for (cycle_type, count) in census.entries() {
        weighted += count * fixed_tabloid_count(cycle_type, shape);
    }
    let order = group.order() as u64;
    if !weighted.is_multiple_of(order) {
        return Err(Error::Inconsistency(format!(
            "weighted fixed-point sum {weighted} not divisible by group order {order} \
             for shape {shape}"
        )));
    }
    Ok(weighted / order)
}

/// Orbit counts for every shape of the group's degree, in the standard
/// partition order.
pub fn count_table(group: &PermGroup) -> Result<Vec<(Partition, u64)>> {
    partitions_of(group.degree())
        .into_iter()
        .map(|shape| burnside_count(group, &shape).map(|n| (shape, n)))
        .collect()
}
