//! The inverse problem: which symmetry groups are consistent with observed
//! derivative counts?
//!
//! Observed counts bound the orbit counts from below (`n_λ` is the maximum
//! number of experimentally distinct λ-derivatives), so a query is a list of
//! relations on `n_λ`. The solver filters every conjugacy class of subgroups
//! of the symmetric group through the census-weighted counts.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{CycleCensus, PermGroup};
use crate::lattice::all_subgroups_up_to_conjugacy;
use crate::orbits::burnside_count;
use crate::partition::{partitions_of, Partition};

/// Comparison used by a count constraint.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

impl Relation {
    pub fn holds(&self, left: u64, right: u64) -> bool {
        match self {
            Relation::Equal => left == right,
            Relation::AtMost => left <= right,
            Relation::AtLeast => left >= right,
        }
    }
}

/// A single observed-count constraint on `n_shape`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CountConstraint {
    pub shape: Partition,
    pub relation: Relation,
    pub value: u64,
}

impl CountConstraint {
    pub fn new(shape: Partition, relation: Relation, value: u64) -> Result<CountConstraint> {
        if value > shape.tabloid_count() {
            return Err(Error::InvalidConstraint(format!(
                "value {value} exceeds the {} tabloids of shape {shape}",
                shape.tabloid_count()
            )));
        }
        Ok(CountConstraint {
            shape,
            relation,
            value,
        })
    }

    /// Validates a deserialized constraint list against one degree.
    pub fn validate_list(constraints: &[CountConstraint]) -> Result<usize> {
        let degree = constraints
            .first()
            .map(|c| c.shape.degree())
            .ok_or_else(|| Error::InvalidConstraint("empty constraint list".into()))?;
        for c in constraints {
            if c.shape.degree() != degree {
                return Err(Error::InvalidConstraint(format!(
                    "shape {} has degree {}, expected {degree}",
                    c.shape,
                    c.shape.degree()
                )));
            }
            if c.value > c.shape.tabloid_count() {
                return Err(Error::InvalidConstraint(format!(
                    "value {} exceeds the {} tabloids of shape {}",
                    c.value,
                    c.shape.tabloid_count(),
                    c.shape
                )));
            }
        }
        Ok(degree)
    }
}

/// A conjugacy class of subgroups together with its complete count table.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupClass {
    pub label: String,
    pub representative: PermGroup,
    /// Orbit count per shape. Each entry is the *maximum* number of
    /// experimentally distinct derivatives with that empirical formula;
    /// observed counts can only fall short of it.
    #[serde(serialize_with = "serialize_counts")]
    pub counts: BTreeMap<Partition, u64>,
    pub census: CycleCensus,
}

fn serialize_counts<S: serde::Serializer>(
    counts: &BTreeMap<Partition, u64>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    let map: BTreeMap<String, u64> = counts.iter().map(|(p, &n)| (p.to_string(), n)).collect();
    map.serialize(serializer)
}

impl SubgroupClass {
    /// Builds the class record for one representative, computing every count.
    pub fn build(representative: PermGroup) -> Result<SubgroupClass> {
        let mut counts = BTreeMap::new();
        for shape in partitions_of(representative.degree()) {
            let n = burnside_count(&representative, &shape)?;
            counts.insert(shape, n);
        }
        let census = representative.cycle_census();
        let label = class_label(&representative, &census);
        Ok(SubgroupClass {
            label,
            representative,
            counts,
            census,
        })
    }

    pub fn count(&self, shape: &Partition) -> u64 {
        self.counts.get(shape).copied().unwrap_or(0)
    }

    pub fn satisfies(&self, constraint: &CountConstraint) -> bool {
        constraint
            .relation
            .holds(self.count(&constraint.shape), constraint.value)
    }
}

/// Cosmetic class tag: order plus a cyclic/dihedral hint read off the census.
fn class_label(group: &PermGroup, census: &CycleCensus) -> String {
    let order = group.order();
    let max_element_order = census
        .entries()
        .map(|(t, _)| {
            t.parts()
                .iter()
                .fold(1usize, |acc, &len| acc / gcd(acc, len) * len)
        })
        .max()
        .unwrap_or(1);
    if order > 1 && max_element_order == order {
        format!("order {order}, cyclic-like")
    } else if order > 2 && order == 2 * max_element_order {
        format!("order {order}, dihedral-like")
    } else {
        format!("order {order}")
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Search bookkeeping for one solver run.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub classes_examined: usize,
    pub rejected_by_counts: usize,
    pub rejected_by_transitivity: usize,
    pub classes_returned: usize,
}

/// The solver's answer: every class satisfying the constraints.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub degree: usize,
    pub transitive_only: bool,
    pub constraints: Vec<CountConstraint>,
    pub classes: Vec<SubgroupClass>,
    pub stats: SearchStats,
    /// Pairs of returned classes sharing the same count for every shape;
    /// counts alone cannot tell such classes apart.
    pub count_collisions: Vec<(usize, usize)>,
}

/// Finds all subgroup classes of the given degree whose orbit counts satisfy
/// every constraint. Contradictory constraints yield an empty class list.
pub fn solve(
    constraints: &[CountConstraint],
    degree: usize,
    transitive_only: bool,
) -> Result<SearchReport> {
    for c in constraints {
        if c.shape.degree() != degree {
            return Err(Error::InvalidConstraint(format!(
                "constraint shape {} does not partition {degree}",
                c.shape
            )));
        }
    }
    let representatives = all_subgroups_up_to_conjugacy(degree)?;
    let examined = representatives.len();
    let all_classes: Vec<SubgroupClass> = representatives
        .into_par_iter()
        .map(SubgroupClass::build)
        .collect::<Result<_>>()?;

    let mut stats = SearchStats {
        classes_examined: examined,
        ..SearchStats::default()
    };
    let mut classes = Vec::new();
    for class in all_classes {
        if !constraints.iter().all(|c| class.satisfies(c)) {
            stats.rejected_by_counts += 1;
            continue;
        }
        if transitive_only && !class.representative.is_transitive() {
            stats.rejected_by_transitivity += 1;
            continue;
        }
        classes.push(class);
    }
    stats.classes_returned = classes.len();

    let mut count_collisions = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            if classes[i].counts == classes[j].counts {
                count_collisions.push((i, j));
            }
        }
    }

    Ok(SearchReport {
        degree,
        transitive_only,
        constraints: constraints.to_vec(),
        classes,
        stats,
        count_collisions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn constraint(shape_text: &str, relation: Relation, value: u64) -> CountConstraint {
        CountConstraint::new(shape(shape_text), relation, value).unwrap()
    }

    #[test]
    fn constraint_json_format() {
        let c = constraint("4,2", Relation::AtLeast, 3);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"shape":[4,2],"relation":">=","value":3}"#
        );
        let parsed: Vec<CountConstraint> = serde_json::from_str(
            r#"[{"shape":[5,1],"relation":"=","value":1},{"shape":[4,2],"relation":">=","value":3}]"#,
        )
        .unwrap();
        assert_eq!(CountConstraint::validate_list(&parsed).unwrap(), 6);
    }

    #[test]
    fn constraint_value_bounded_by_tabloid_count() {
        assert!(CountConstraint::new(shape("4,2"), Relation::Equal, 16).is_err());
        assert!(CountConstraint::new(shape("4,2"), Relation::Equal, 15).is_ok());
    }

    #[test]
    fn all_singleton_orbits_forces_trivial_group() {
        let report = solve(
            &[constraint("1,1,1,1,1,1", Relation::Equal, 720)],
            6,
            false,
        )
        .unwrap();
        assert_eq!(report.classes.len(), 1);
        assert_eq!(report.classes[0].representative.order(), 1);
    }

    #[test]
    fn contradictory_constraints_return_empty() {
        let report = solve(
            &[
                constraint("5,1", Relation::Equal, 1),
                constraint("5,1", Relation::Equal, 6),
            ],
            6,
            false,
        )
        .unwrap();
        assert!(report.classes.is_empty());
        assert_eq!(report.stats.rejected_by_counts, report.stats.classes_examined);
    }

    #[test]
    fn small_degree_solver_is_sound_and_complete() {
        // every subgroup of S4 is two-generated, so the brute-force list is complete
        let constraints = [constraint("3,1", Relation::Equal, 1)];
        let report = solve(&constraints, 4, false).unwrap();
        let brute = crate::lattice::all_subgroups_brute_force(4).unwrap();
        let matching: Vec<&PermGroup> = brute
            .iter()
            .filter(|g| {
                constraints.iter().all(|c| {
                    c.relation
                        .holds(burnside_count(g, &c.shape).unwrap(), c.value)
                })
            })
            .collect();
        // soundness and completeness: the filtered subgroups fall into
        // exactly the returned classes
        for subgroup in &matching {
            let hits = report
                .classes
                .iter()
                .filter(|class| class.representative.are_conjugate(subgroup).is_some())
                .count();
            assert_eq!(hits, 1);
        }
        for class in &report.classes {
            assert!(matching
                .iter()
                .any(|g| class.representative.are_conjugate(g).is_some()));
        }
        // the transitive subgroups of S4: C4, V4, D4, A4, S4
        assert_eq!(report.classes.len(), 5);
    }

    #[test]
    fn pinning_the_di_substitution_count_to_four_leaves_one_class() {
        let report = solve(
            &[
                constraint("5,1", Relation::Equal, 1),
                constraint("4,2", Relation::AtLeast, 3),
                constraint("4,2", Relation::Equal, 4),
            ],
            6,
            false,
        )
        .unwrap();
        assert_eq!(report.classes.len(), 1);
        let class = &report.classes[0];
        assert_eq!(class.representative.order(), 6);
        assert_eq!(class.label, "order 6, dihedral-like");
        let dihedral =
            PermGroup::from_cycle_strings(&["(123)(456)", "(14)(26)(35)"], 6).unwrap();
        assert!(class.representative.are_conjugate(&dihedral).is_some());
    }

    #[test]
    fn labels_follow_census_shape() {
        let cyclic = PermGroup::from_cycle_strings(&["(123456)"], 6).unwrap();
        let class = SubgroupClass::build(cyclic).unwrap();
        assert_eq!(class.label, "order 6, cyclic-like");
        let dihedral =
            PermGroup::from_cycle_strings(&["(123)(456)", "(14)(26)(35)"], 6).unwrap();
        let class = SubgroupClass::build(dihedral).unwrap();
        assert_eq!(class.label, "order 6, dihedral-like");
    }
}
