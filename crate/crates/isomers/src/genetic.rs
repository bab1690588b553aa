//! Substitution order and genetic relations.
//!
//! A simple substitution step moves one site of a tabloid into an earlier
//! component, pushing the shape strictly up in dominance order. Pulled down
//! to orbits, single steps between two adjacent shapes form a digraph whose
//! arrows point from the upper shape's orbits to the lower shape's orbits:
//! an arrow means the lower derivative is reachable from the upper one by
//! one substitution.
//!
//! Orbits of equal shape that carry different arrow patterns can be told
//! apart experimentally; iterating that argument refines each shape's orbits
//! into distinguishability blocks.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbits::{orbit_label, orbit_space, OrbitSpace};
use crate::partition::Partition;
use crate::tabloid::Tabloid;

/// Dominance comparison: true when every prefix sum of `a` is at most the
/// corresponding prefix sum of `b`.
///
/// Panics when the partitions have different degrees.
pub fn dominance_leq(a: &Partition, b: &Partition) -> bool {
    assert_eq!(
        a.degree(),
        b.degree(),
        "dominance compares partitions of the same degree"
    );
    let len = a.len().max(b.len());
    let mut sum_a = 0usize;
    let mut sum_b = 0usize;
    for i in 0..len {
        sum_a += a.part(i);
        sum_b += b.part(i);
        if sum_a > sum_b {
            return false;
        }
    }
    true
}

/// One upward substitution step: moving `moved_site` from component
/// `from_component` into the earlier component `to_component` turns `source`
/// into `target`, whose shape strictly dominates the source's.
///
/// Component indices are 1-based and refer to the source tabloid.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SubstitutionMove {
    pub source: Tabloid,
    pub target: Tabloid,
    pub moved_site: usize,
    pub from_component: usize,
    pub to_component: usize,
}

/// All single-site moves from a component into any earlier component.
///
/// A move that empties its source component drops it; a move that breaks the
/// weakly-decreasing size order re-sorts components by size, stably.
pub fn simple_moves(source: &Tabloid) -> Vec<SubstitutionMove> {
    let components = source.components();
    let mut moves = Vec::new();
    for from in 1..components.len() {
        for to in 0..from {
            for &site in &components[from] {
                let mut next: Vec<Vec<usize>> = components.to_vec();
                next[from].retain(|&s| s != site);
                next[to].push(site);
                next.retain(|component| !component.is_empty());
                next.sort_by_key(|component| std::cmp::Reverse(component.len()));
                let target = Tabloid::new(next).expect("moved tabloid stays valid");
                moves.push(SubstitutionMove {
                    source: source.clone(),
                    target,
                    moved_site: site,
                    from_component: from + 1,
                    to_component: to + 1,
                });
            }
        }
    }
    moves.dedup();
    moves
}

/// Shapes reachable from `shape` by one upward substitution step.
pub fn shape_step_ups(shape: &Partition) -> Vec<Partition> {
    let parts = shape.parts();
    let mut out = BTreeSet::new();
    for from in 1..parts.len() {
        for to in 0..from {
            let mut next = parts.to_vec();
            next[from] -= 1;
            next[to] += 1;
            next.retain(|&p| p > 0);
            next.sort_unstable_by(|a, b| b.cmp(a));
            out.insert(Partition::new(next).expect("step result is a partition"));
        }
    }
    out.into_iter().collect()
}

/// True when `lower` is exactly one substitution step below `upper`.
pub fn shapes_step_adjacent(upper: &Partition, lower: &Partition) -> bool {
    upper.degree() == lower.degree() && shape_step_ups(lower).contains(upper)
}

/// The genetic digraph between the orbits of two step-adjacent shapes.
///
/// An edge `(upper orbit, lower orbit)` is present exactly when some member
/// of the lower orbit reaches some member of the upper orbit by one
/// substitution step. Edge multiplicities count the witnessing moves.
#[derive(Clone, Debug)]
pub struct GeneticDigraph {
    group: PermGroup,
    upper: OrbitSpace,
    lower: OrbitSpace,
    edges: BTreeSet<(usize, usize)>,
    multiplicities: BTreeMap<(usize, usize), u64>,
}

impl GeneticDigraph {
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn upper_shape(&self) -> &Partition {
        self.upper.shape()
    }

    pub fn lower_shape(&self) -> &Partition {
        self.lower.shape()
    }

    pub fn upper_space(&self) -> &OrbitSpace {
        &self.upper
    }

    pub fn lower_space(&self) -> &OrbitSpace {
        &self.lower
    }

    /// Edges as `(upper orbit index, lower orbit index)`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Edges as `(upper label, lower label)` pairs, sorted.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, l)| (orbit_label(u), orbit_label(l)))
            .collect()
    }

    /// Number of witnessing moves behind an edge; zero when absent.
    pub fn multiplicity(&self, upper: usize, lower: usize) -> u64 {
        self.multiplicities
            .get(&(upper, lower))
            .copied()
            .unwrap_or(0)
    }

    /// Edges with their move multiplicities, as `(upper label, lower label,
    /// count)` triples, sorted.
    pub fn labeled_multiplicities(&self) -> Vec<(String, String, u64)> {
        self.multiplicities
            .iter()
            .map(|(&(u, l), &count)| (orbit_label(u), orbit_label(l), count))
            .collect()
    }

    /// Lower orbit indices adjacent to the given upper orbit.
    pub fn lower_neighbors(&self, upper: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(u, _)| u == upper)
            .map(|&(_, l)| l)
            .collect()
    }

    /// Upper orbit indices adjacent to the given lower orbit.
    pub fn upper_neighbors(&self, lower: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(_, l)| l == lower)
            .map(|&(u, _)| u)
            .collect()
    }

    /// Graphviz rendering, one rank per shape; node identifiers are the
    /// labels with punctuation flattened, display labels keep the shape.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph genetic {\n  rankdir=TB;\n");
        for (space, count) in [
            (&self.upper, self.upper.count()),
            (&self.lower, self.lower.count()),
        ] {
            out.push_str("  { rank=same;");
            for index in 0..count {
                let label = node_label(&orbit_label(index), space.shape());
                out.push_str(&format!(
                    " {} [label=\"{}\"];",
                    dot_id(&label),
                    label
                ));
            }
            out.push_str(" }\n");
        }
        for &(u, l) in &self.edges {
            let from = node_label(&orbit_label(u), self.upper.shape());
            let to = node_label(&orbit_label(l), self.lower.shape());
            out.push_str(&format!("  {} -> {};\n", dot_id(&from), dot_id(&to)));
        }
        out.push_str("}\n");
        out
    }
}

impl Serialize for GeneticDigraph {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("GeneticDigraph", 4)?;
        s.serialize_field("group", &self.group)?;
        s.serialize_field("upper_shape", self.upper.shape())?;
        s.serialize_field("lower_shape", self.lower.shape())?;
        s.serialize_field("edges", &self.labeled_edges())?;
        s.end()
    }
}

/// Node label `a_(4,2)` used in diagrams.
pub fn node_label(orbit: &str, shape: &Partition) -> String {
    format!("{orbit}_{shape}")
}

fn dot_id(label: &str) -> String {
    label
        .chars()
        .filter_map(|c| match c {
            '(' | ')' => None,
            ',' => Some('_'),
            c => Some(c),
        })
        .collect()
}

/// Builds the genetic digraph for a step-adjacent shape pair.
pub fn genetic_digraph(
    group: &PermGroup,
    upper: &Partition,
    lower: &Partition,
) -> Result<GeneticDigraph> {
    if !shapes_step_adjacent(upper, lower) {
        return Err(Error::ShapesNotAdjacent {
            upper: upper.to_string(),
            lower: lower.to_string(),
        });
    }
    let upper_space = orbit_space(group, upper)?;
    let lower_space = orbit_space(group, lower)?;
    let upper_index: HashMap<Tabloid, usize> = upper_space.membership_map();

    let mut edges = BTreeSet::new();
    let mut multiplicities: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for (lower_idx, orbit) in lower_space.orbits().iter().enumerate() {
        for member in orbit.members() {
            for step in simple_moves(member) {
                if step.target.shape() == *upper {
                    let upper_idx = upper_index[&step.target];
                    edges.insert((upper_idx, lower_idx));
                    *multiplicities.entry((upper_idx, lower_idx)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(GeneticDigraph {
        group: group.clone(),
        upper: upper_space,
        lower: lower_space,
        edges,
        multiplicities,
    })
}

/// Distinguishability blocks for the orbits of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentificationPartition {
    pub shape: Partition,
    /// Blocks of orbit labels; orbits in the same block cannot be told apart
    /// by counting genetic neighbors. Blocks are ordered by first orbit.
    pub blocks: Vec<Vec<String>>,
}

impl IdentificationPartition {
    /// True when every block is a singleton.
    pub fn fully_separated(&self) -> bool {
        self.blocks.iter().all(|block| block.len() == 1)
    }
}

/// Iteratively refines the orbits of the given shapes by their degrees into
/// the neighbor blocks of every step-adjacent digraph among the shapes,
/// until nothing splits further.
pub fn identification_partition(
    group: &PermGroup,
    shapes: &[Partition],
) -> Result<BTreeMap<Partition, IdentificationPartition>> {
    let mut unique: Vec<Partition> = shapes.to_vec();
    unique.sort();
    unique.dedup();
    for shape in &unique {
        if shape.degree() != group.degree() {
            return Err(Error::DegreeMismatch {
                expected: group.degree(),
                found: shape.degree(),
            });
        }
    }

    let mut digraphs: Vec<GeneticDigraph> = Vec::new();
    for upper in &unique {
        for lower in &unique {
            if shapes_step_adjacent(upper, lower) {
                digraphs.push(genetic_digraph(group, upper, lower)?);
            }
        }
    }
    let orbit_counts: BTreeMap<Partition, usize> = unique
        .iter()
        .map(|shape| Ok((shape.clone(), orbit_space(group, shape)?.count())))
        .collect::<Result<_>>()?;

    // block id of each orbit, per shape; everything starts undistinguished
    let mut blocks: BTreeMap<Partition, Vec<usize>> = orbit_counts
        .iter()
        .map(|(shape, &n)| (shape.clone(), vec![0; n]))
        .collect();

    // per digraph touching a shape: the direction and, per block of the
    // opposite shape, the number of adjacent orbits in it
    type Signature = Vec<(usize, bool, Vec<(usize, usize)>)>;

    loop {
        let mut changed = false;
        for shape in &unique {
            let n = orbit_counts[shape];
            let mut signatures: Vec<Signature> = vec![Vec::new(); n];
            for (d_idx, digraph) in digraphs.iter().enumerate() {
                if digraph.upper_shape() == shape {
                    let lower_blocks = &blocks[digraph.lower_shape()];
                    for (orbit, signature) in signatures.iter_mut().enumerate() {
                        let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
                        for neighbor in digraph.lower_neighbors(orbit) {
                            *degrees.entry(lower_blocks[neighbor]).or_insert(0) += 1;
                        }
                        signature.push((d_idx, true, degrees.into_iter().collect()));
                    }
                }
                if digraph.lower_shape() == shape {
                    let upper_blocks = &blocks[digraph.upper_shape()];
                    for (orbit, signature) in signatures.iter_mut().enumerate() {
                        let mut degrees: BTreeMap<usize, usize> = BTreeMap::new();
                        for neighbor in digraph.upper_neighbors(orbit) {
                            *degrees.entry(upper_blocks[neighbor]).or_insert(0) += 1;
                        }
                        signature.push((d_idx, false, degrees.into_iter().collect()));
                    }
                }
            }
            let old = blocks[shape].clone();
            let mut new_ids: BTreeMap<(usize, &Signature), usize> = BTreeMap::new();
            let mut next: Vec<usize> = Vec::with_capacity(n);
            for (orbit, signature) in signatures.iter().enumerate() {
                let key = (old[orbit], signature);
                let fresh = new_ids.len();
                let id = *new_ids.entry(key).or_insert(fresh);
                next.push(id);
            }
            if next != old {
                changed = true;
                blocks.insert(shape.clone(), next);
            }
        }
        if !changed {
            break;
        }
    }

    let mut result = BTreeMap::new();
    for shape in &unique {
        let assignment = &blocks[shape];
        let block_count = assignment.iter().copied().max().map_or(0, |m| m + 1);
        let mut grouped: Vec<Vec<String>> = vec![Vec::new(); block_count];
        for (orbit, &block) in assignment.iter().enumerate() {
            grouped[block].push(orbit_label(orbit));
        }
        result.insert(
            shape.clone(),
            IdentificationPartition {
                shape: shape.clone(),
                blocks: grouped,
            },
        );
    }
    Ok(result)
}
