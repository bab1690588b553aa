//! Tabloids: ordered set partitions of the sites `1..=d`, the structural
//! formulae of the model.
//!
//! A tabloid `(A₁, A₂, …)` records which sites carry which kind of
//! substituent. Components with equal sizes are still ordered: swapping two
//! equal-size components gives a different tabloid. The sequence of component
//! sizes is the tabloid's shape.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::Permutation;

/// An ordered tuple of pairwise disjoint, nonempty site sets covering
/// `1..=d`, with weakly decreasing component sizes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    components: Vec<Vec<usize>>,
}

impl Tabloid {
    /// Builds a tabloid. Sites within a component are sorted automatically;
    /// component sizes must already be weakly decreasing.
    pub fn new(mut components: Vec<Vec<usize>>) -> Result<Tabloid> {
        if components.is_empty() {
            return Err(Error::InvalidTabloid("no components".into()));
        }
        if !components.windows(2).all(|w| w[0].len() >= w[1].len()) {
            return Err(Error::InvalidTabloid(
                "component sizes must be weakly decreasing".into(),
            ));
        }
        for component in &mut components {
            if component.is_empty() {
                return Err(Error::InvalidTabloid("empty component".into()));
            }
            component.sort_unstable();
        }
        let degree: usize = components.iter().map(Vec::len).sum();
        let mut seen = vec![false; degree];
        for component in &components {
            for &site in component {
                if site == 0 || site > degree {
                    return Err(Error::InvalidTabloid(format!(
                        "site {site} outside 1..={degree}"
                    )));
                }
                if seen[site - 1] {
                    return Err(Error::InvalidTabloid(format!("site {site} repeated")));
                }
                seen[site - 1] = true;
            }
        }
        Partition::new(components.iter().map(Vec::len).collect())?;
        Ok(Tabloid { components })
    }

    /// The components in order, each sorted ascending.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn degree(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// The shape: the sequence of component sizes.
    pub fn shape(&self) -> Partition {
        Partition::new(self.components.iter().map(Vec::len).collect())
            .expect("tabloid sizes form a partition")
    }

    /// Applies a permutation componentwise: each component is replaced by its
    /// image set. The shape is preserved.
    ///
    /// Panics when the degrees differ.
    pub fn act(&self, p: &Permutation) -> Tabloid {
        assert_eq!(
            self.degree(),
            p.degree(),
            "permutation degree does not match tabloid degree"
        );
        let components = self
            .components
            .iter()
            .map(|component| {
                let mut image: Vec<usize> = component.iter().map(|&s| p.image(s)).collect();
                image.sort_unstable();
                image
            })
            .collect();
        Tabloid { components }
    }
}

/// Every tabloid of the given shape, exactly once, in lexicographic order of
/// the component sequence.
pub fn enumerate_tabloids(shape: &Partition) -> Vec<Tabloid> {
    fn subsets(pool: &[usize], size: usize, out: &mut Vec<Vec<usize>>) {
        fn rec(pool: &[usize], size: usize, start: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if prefix.len() == size {
                out.push(prefix.clone());
                return;
            }
            let needed = size - prefix.len();
            for i in start..=pool.len().saturating_sub(needed) {
                prefix.push(pool[i]);
                rec(pool, size, i + 1, prefix, out);
                prefix.pop();
            }
        }
        rec(pool, size, 0, &mut Vec::new(), out);
    }

    fn rec(
        remaining: &[usize],
        parts: &[usize],
        prefix: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tabloid>,
    ) {
        match parts.split_first() {
            None => out.push(Tabloid {
                components: prefix.clone(),
            }),
            Some((&size, rest)) => {
                let mut choices = Vec::new();
                subsets(remaining, size, &mut choices);
                for choice in choices {
                    let leftover: Vec<usize> = remaining
                        .iter()
                        .copied()
                        .filter(|s| !choice.contains(s))
                        .collect();
                    prefix.push(choice);
                    rec(&leftover, rest, prefix, out);
                    prefix.pop();
                }
            }
        }
    }

    let sites: Vec<usize> = (1..=shape.degree()).collect();
    let mut out = Vec::with_capacity(shape.tabloid_count() as usize);
    rec(&sites, shape.parts(), &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Tabloid {
    /// Renders as `({1,2,4,5},{3,6})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, component) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (j, site) in component.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{site}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tabloid{}", self)
    }
}

impl FromStr for Tabloid {
    type Err = Error;

    /// Parses `({1,2,4,5},{3,6})`; whitespace between tokens is tolerated.
    fn from_str(s: &str) -> Result<Tabloid> {
        let text = s.trim();
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidTabloid(format!("missing outer parentheses in {s:?}")))?;
        let mut components = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(',').trim();
            let body_start = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::InvalidTabloid(format!("expected '{{' in {s:?}")))?;
            let end = body_start
                .find('}')
                .ok_or_else(|| Error::InvalidTabloid(format!("unterminated component in {s:?}")))?;
            let body = &body_start[..end];
            let sites = body
                .split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidTabloid(format!("bad site {tok:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            components.push(sites);
            rest = body_start[end + 1..].trim();
        }
        Tabloid::new(components)
    }
}

impl Serialize for Tabloid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> Tabloid {
        text.parse().unwrap()
    }

    #[test]
    fn shape_projection() {
        assert_eq!(t("({1,2,4,5},{3,6})").shape(), "4,2".parse().unwrap());
        assert_eq!(
            t("({1},{2},{3},{4},{5},{6})").shape(),
            "1,1,1,1,1,1".parse().unwrap()
        );
        assert_eq!(t("({1,3,5},{2,4,6})").shape(), "3,3".parse().unwrap());
    }

    #[test]
    fn enumeration_counts() {
        let counts: &[(&str, usize)] = &[("5,1", 6), ("4,2", 15), ("6", 1), ("3,3", 20)];
        for (shape, expected) in counts {
            let shape: Partition = shape.parse().unwrap();
            let all = enumerate_tabloids(&shape);
            assert_eq!(all.len(), *expected, "shape {shape}");
            assert_eq!(all.len() as u64, shape.tabloid_count());
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted, all, "lexicographic and duplicate-free");
        }
    }

    #[test]
    fn equal_size_components_are_ordered() {
        let all = enumerate_tabloids(&"3,3".parse().unwrap());
        assert!(all.contains(&t("({1,2,4},{3,5,6})")));
        assert!(all.contains(&t("({3,5,6},{1,2,4})")));
    }

    #[test]
    fn action_examples() {
        let rotate = Permutation::parse_cycles("(123456)", 6).unwrap();
        let identity = Permutation::identity(6);
        let b = t("({1,2,3,4},{5,6})");
        assert_eq!(b.act(&identity), b);
        assert_eq!(b.act(&rotate), t("({2,3,4,5},{1,6})"));
        assert_eq!(
            t("({1,3,5},{2,4,6})").act(&rotate),
            t("({2,4,6},{1,3,5})")
        );
    }

    #[test]
    fn action_preserves_shape() {
        let rotate = Permutation::parse_cycles("(123456)", 6).unwrap();
        let a = t("({1,2,4,5},{3},{6})");
        assert_eq!(a.act(&rotate).shape(), a.shape());
    }

    #[test]
    fn rejects_invalid_tabloids() {
        assert!(Tabloid::new(vec![]).is_err());
        assert!(Tabloid::new(vec![vec![1, 2], vec![2, 3]]).is_err());
        assert!(Tabloid::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tabloid::new(vec![vec![1, 7], vec![2, 3]]).is_err());
        assert!("({1,2},{3})x".parse::<Tabloid>().is_err());
        assert!("({1,2}{3})".parse::<Tabloid>().is_ok());
    }

    #[test]
    fn display_round_trips() {
        let a = t("({1,2,4,5},{3,6})");
        assert_eq!(a.to_string(), "({1,2,4,5},{3,6})");
        assert_eq!(a.to_string().parse::<Tabloid>().unwrap(), a);
    }
}
