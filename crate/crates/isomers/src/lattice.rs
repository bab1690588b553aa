//! Enumeration of all subgroups of the symmetric group up to conjugacy.
//!
//! Seeds with the cyclic subgroups, then repeatedly extends every newly found
//! class representative by one extra generator and deduplicates by conjugacy.
//! Every subgroup is reachable by adding generators one at a time, so the
//! fixpoint is complete; nothing assumes two generators suffice.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{symmetric_elements_iter, CycleCensus, PermGroup};
use crate::perm::Permutation;

/// Enumeration is exhaustive over `d!` conjugators, so the degree is capped.
pub const MAX_LATTICE_DEGREE: usize = 7;

struct ClassTable {
    classes: Vec<(PermGroup, CycleCensus)>,
    /// Every concrete subgroup seen so far, by element list.
    seen: HashMap<Vec<Permutation>, usize>,
}

impl ClassTable {
    fn new() -> ClassTable {
        ClassTable {
            classes: Vec::new(),
            seen: HashMap::new(),
        }
    }

    /// Files a subgroup into its conjugacy class, returning the class index
    /// and whether it opened a new class.
    fn insert(&mut self, candidate: PermGroup) -> (usize, bool) {
        if let Some(&index) = self.seen.get(candidate.elements()) {
            return (index, false);
        }
        let census = candidate.cycle_census();
        let matched = self
            .classes
            .iter()
            .position(|(rep, rep_census)| {
                rep.order() == candidate.order()
                    && *rep_census == census
                    && rep.conjugacy_witness_unpruned(&candidate).is_some()
            });
        let (index, fresh) = match matched {
            Some(index) => (index, false),
            None => {
                self.classes.push((candidate.clone(), census));
                (self.classes.len() - 1, true)
            }
        };
        self.seen.insert(candidate.elements().to_vec(), index);
        (index, fresh)
    }
}

/// One representative per conjugacy class of subgroups of the symmetric
/// group on `1..=degree`, sorted by order, census and element list.
pub fn all_subgroups_up_to_conjugacy(degree: usize) -> Result<Vec<PermGroup>> {
    if degree == 0 || degree > MAX_LATTICE_DEGREE {
        return Err(Error::DegreeTooLarge {
            degree,
            limit: MAX_LATTICE_DEGREE,
        });
    }
    let symmetric: Vec<Permutation> = symmetric_elements_iter(degree).collect();
    let mut table = ClassTable::new();

    // cyclic seeds
    let seeds: Vec<PermGroup> = symmetric
        .par_iter()
        .map(|g| PermGroup::closure(std::slice::from_ref(g), degree).expect("cyclic closure"))
        .collect();
    let mut fresh_classes: Vec<usize> = Vec::new();
    for seed in seeds {
        let (index, fresh) = table.insert(seed);
        if fresh {
            fresh_classes.push(index);
        }
    }

    // extend every new class by one generator until nothing new appears
    while !fresh_classes.is_empty() {
        let mut tasks: Vec<Vec<Permutation>> = Vec::new();
        for &class_index in &fresh_classes {
            let rep = table.classes[class_index].0.clone();
            // one extension per right coset: ⟨H, g⟩ only depends on Hg
            let mut covered: HashSet<Permutation> = rep.elements().iter().copied().collect();
            for g in &symmetric {
                if covered.contains(g) {
                    continue;
                }
                for h in rep.elements() {
                    covered.insert(h.compose(g));
                }
                let mut generators = rep.generators().to_vec();
                generators.push(*g);
                tasks.push(generators);
            }
        }
        let candidates: Vec<PermGroup> = tasks
            .par_iter()
            .map(|generators| {
                PermGroup::closure(generators, degree).expect("extension closure")
            })
            .collect();
        fresh_classes.clear();
        for candidate in candidates {
            let (index, fresh) = table.insert(candidate);
            if fresh {
                fresh_classes.push(index);
            }
        }
    }

    let mut representatives: Vec<PermGroup> =
        table.classes.into_iter().map(|(rep, _)| rep).collect();
    representatives.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| {
                a.cycle_census()
                    .entries()
                    .map(|(t, c)| (t.clone(), c))
                    .collect::<Vec<_>>()
                    .cmp(&b.cycle_census().entries().map(|(t, c)| (t.clone(), c)).collect())
            })
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(representatives)
}

/// All subgroups of the symmetric group, not up to conjugacy. Exponential;
/// only sensible for `degree ≤ 4`, where two generators always suffice.
pub fn all_subgroups_brute_force(degree: usize) -> Result<Vec<PermGroup>> {
    if degree == 0 || degree > 4 {
        return Err(Error::DegreeTooLarge { degree, limit: 4 });
    }
    let symmetric: Vec<Permutation> = symmetric_elements_iter(degree).collect();
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut out: Vec<PermGroup> = Vec::new();
    for a in &symmetric {
        for b in &symmetric {
            let group = PermGroup::closure(&[*a, *b], degree)?;
            if seen.insert(group.elements().to_vec()) {
                out.push(group);
            }
        }
    }
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    Ok(out)
}
