//! Finite permutation groups presented by generators.
//!
//! A [`PermGroup`] always carries its complete, sorted element list, so order,
//! membership and the cycle-type census are exact. This is deliberate: the
//! degrees of interest are small and every downstream count must be exact.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation, MAX_DEGREE};

/// Degrees above this make the full `d!` element list of the symmetric group
/// unreasonable to materialize.
pub const MAX_SYMMETRIC_DEGREE: usize = 8;

/// A subgroup of the symmetric group on `1..=degree`, with its full element
/// list.
///
/// Elements are kept sorted by image sequence, so two equal subgroups have
/// identical element lists and iteration order is reproducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// The subgroup generated by `generators`. An empty generator list yields
    /// the trivial group.
    pub fn closure(generators: &[Permutation], degree: usize) -> Result<PermGroup> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: MAX_DEGREE,
            });
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity);
        let mut frontier = vec![identity];
        while let Some(current) = frontier.pop() {
            for g in generators {
                let next = g.compose(&current);
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(PermGroup {
            degree,
            generators: generators.to_vec(),
            elements,
        })
    }

    /// Parses generator strings in cycle notation and takes their closure.
    pub fn from_cycle_strings(generators: &[&str], degree: usize) -> Result<PermGroup> {
        let gens = generators
            .iter()
            .map(|text| Permutation::parse_cycles(text, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::closure(&gens, degree)
    }

    /// The trivial group on `1..=degree`.
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::closure(&[], degree).expect("trivial group")
    }

    /// The full symmetric group on `1..=degree`. Guarded because the element
    /// list has `d!` entries.
    pub fn symmetric(degree: usize) -> Result<PermGroup> {
        if !(1..=MAX_SYMMETRIC_DEGREE).contains(&degree) {
            return Err(Error::DegreeTooLarge {
                degree,
                limit: MAX_SYMMETRIC_DEGREE,
            });
        }
        if degree == 1 {
            return Ok(PermGroup::trivial(1));
        }
        let transposition = {
            let mut images: Vec<usize> = (1..=degree).collect();
            images.swap(0, 1);
            Permutation::from_images(&images)?
        };
        let cycle = {
            let mut images: Vec<usize> = (2..=degree).collect();
            images.push(1);
            Permutation::from_images(&images)?
        };
        PermGroup::closure(&[transposition, cycle], degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements, sorted by image sequence.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// True when the other group's element set contains this one's.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|g| other.contains(g))
    }

    /// Counts elements by cycle type.
    pub fn cycle_census(&self) -> CycleCensus {
        let mut counts: BTreeMap<CycleType, u64> = BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.cycle_type()).or_insert(0) += 1;
        }
        CycleCensus { counts }
    }

    /// True when the orbit of site 1 under the group is all of `1..=degree`.
    pub fn is_transitive(&self) -> bool {
        let mut reached = vec![false; self.degree];
        reached[0] = true;
        let mut frontier = vec![1usize];
        let mut count = 1usize;
        while let Some(site) = frontier.pop() {
            for g in &self.generators {
                let image = g.image(site);
                if !reached[image - 1] {
                    reached[image - 1] = true;
                    count += 1;
                    frontier.push(image);
                }
            }
        }
        count == self.degree
    }

    /// The conjugate group `s · self · s⁻¹`.
    pub fn conjugate_by(&self, s: &Permutation) -> PermGroup {
        assert_eq!(self.degree, s.degree(), "conjugating by wrong degree");
        let generators: Vec<Permutation> =
            self.generators.iter().map(|g| g.conjugate(s)).collect();
        let mut elements: Vec<Permutation> =
            self.elements.iter().map(|g| g.conjugate(s)).collect();
        elements.sort_unstable();
        PermGroup {
            degree: self.degree,
            generators,
            elements,
        }
    }

    /// Searches the whole symmetric group for a witness `s` with
    /// `s · self · s⁻¹ = other`, returning the lexicographically least one.
    ///
    /// Candidates are pruned by order and census first; equal groups yield the
    /// identity witness.
    pub fn are_conjugate(&self, other: &PermGroup) -> Option<Permutation> {
        if self.degree != other.degree || self.order() != other.order() {
            return None;
        }
        if self.cycle_census() != other.cycle_census() {
            return None;
        }
        self.conjugacy_witness_unpruned(other)
    }

    /// The exhaustive witness search, without the census prune. Used after a
    /// caller has already compared censuses.
    pub(crate) fn conjugacy_witness_unpruned(&self, other: &PermGroup) -> Option<Permutation> {
        symmetric_elements_iter(self.degree).find(|s| {
            self.elements
                .iter()
                .all(|g| other.contains(&g.conjugate(s)))
        })
    }

    /// The normalizer of this group inside the full symmetric group.
    pub fn normalizer_in_symmetric(&self) -> PermGroup {
        let stabilizing: Vec<Permutation> = symmetric_elements_iter(self.degree)
            .filter(|s| {
                self.elements
                    .iter()
                    .all(|g| self.contains(&g.conjugate(s)))
            })
            .collect();
        PermGroup {
            degree: self.degree,
            generators: stabilizing.clone(),
            elements: stabilizing,
        }
    }

    /// Generator strings in cycle notation.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PermGroup(degree={}, order={}, gens=⟨{}⟩)",
            self.degree,
            self.order(),
            self.generator_strings().join(", ")
        )
    }
}

impl Serialize for PermGroup {
    /// Serializes as `{degree, generators, order}`; the element list is
    /// recomputed on load.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("PermGroup", 3)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("generators", &self.generator_strings())?;
        s.serialize_field("order", &self.order())?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for PermGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            generators: Vec<String>,
            #[serde(default)]
            order: Option<usize>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let gens: Vec<&str> = raw.generators.iter().map(String::as_str).collect();
        let group =
            PermGroup::from_cycle_strings(&gens, raw.degree).map_err(D::Error::custom)?;
        if let Some(order) = raw.order {
            if order != group.order() {
                return Err(D::Error::custom(format!(
                    "declared order {order} but closure has order {}",
                    group.order()
                )));
            }
        }
        Ok(group)
    }
}

/// The number of elements of each cycle type in a group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleCensus {
    counts: BTreeMap<CycleType, u64>,
}

impl CycleCensus {
    /// Count of elements of the given type, zero when absent.
    pub fn count(&self, cycle_type: &CycleType) -> u64 {
        self.counts.get(cycle_type).copied().unwrap_or(0)
    }

    /// All recorded `(type, count)` pairs, in increasing type order.
    pub fn entries(&self) -> impl Iterator<Item = (&CycleType, u64)> {
        self.counts.iter().map(|(t, &c)| (t, c))
    }

    /// Sum of all counts; equals the group order.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

impl Serialize for CycleCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let map: BTreeMap<String, u64> = self
            .counts
            .iter()
            .map(|(t, &c)| (t.to_string(), c))
            .collect();
        map.serialize(serializer)
    }
}

/// Iterates the elements of the symmetric group on `1..=degree` in
/// lexicographic image order, without materializing the whole list.
pub fn symmetric_elements_iter(degree: usize) -> impl Iterator<Item = Permutation> {
    assert!(
        (1..=MAX_DEGREE).contains(&degree),
        "degree {degree} outside 1..={MAX_DEGREE}"
    );
    let mut images: Option<Vec<usize>> = Some((1..=degree).collect());
    std::iter::from_fn(move || {
        let current = images.take()?;
        let result = Permutation::from_images(&current).expect("valid images");
        images = next_lexicographic(current);
        Some(result)
    })
}

fn next_lexicographic(mut v: Vec<usize>) -> Option<Vec<usize>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}
