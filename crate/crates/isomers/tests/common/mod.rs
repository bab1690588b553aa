//! Shared golden fixtures: the published orbit listings, substitution
//! digraphs and distinguishability blocks for the three degree-6 groups,
//! keyed by the listing's own orbit letters.
//!
//! Listing letters do not follow this crate's label convention (ours are
//! assigned in lexicographic order of orbit representatives), so tests map
//! letters to computed orbits through the listed members.

use std::collections::{BTreeMap, BTreeSet};

use isomers::group::PermGroup;
use isomers::orbits::{orbit_space, OrbitSpace};
use isomers::partition::Partition;
use isomers::tabloid::Tabloid;

pub struct ShapeListing {
    pub shape: &'static str,
    /// `(letter, members)` pairs exactly as listed.
    pub orbits: &'static [(&'static str, &'static [&'static str])],
}

pub struct DigraphFixture {
    pub upper: &'static str,
    pub lower: &'static str,
    /// `(upper letter, lower letter)` pairs.
    pub edges: &'static [(&'static str, &'static str)],
}

pub struct IdentificationFixture {
    pub shapes: &'static [&'static str],
    /// `(shape, blocks of letters)` for every shape in `shapes`.
    pub blocks: &'static [(&'static str, &'static [&'static [&'static str]])],
}

pub struct SectionFixture {
    pub name: &'static str,
    pub generators: &'static [&'static str],
    pub listings: &'static [ShapeListing],
    pub digraphs: &'static [DigraphFixture],
    pub identifications: &'static [IdentificationFixture],
}

/// Hexagon rotation-reflection group of order 12, in its two-generator form.
pub const ORDER_TWELVE: SectionFixture = SectionFixture {
    name: "order twelve",
    generators: &["(123456)", "(13)(46)"],
    listings: &[
        ShapeListing {
            shape: "4,2",
            orbits: &[
                (
                    "a",
                    &["({1,2,4,5},{3,6})", "({2,3,5,6},{1,4})", "({1,3,4,6},{2,5})"],
                ),
                (
                    "b",
                    &[
                        "({1,2,3,4},{5,6})",
                        "({2,3,4,5},{1,6})",
                        "({3,4,5,6},{1,2})",
                        "({1,4,5,6},{2,3})",
                        "({1,2,5,6},{3,4})",
                        "({1,2,3,6},{4,5})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,4,6},{3,5})",
                        "({1,2,3,5},{4,6})",
                        "({2,3,4,6},{1,5})",
                        "({1,3,4,5},{2,6})",
                        "({2,4,5,6},{1,3})",
                        "({1,3,5,6},{2,4})",
                    ],
                ),
            ],
        },
        ShapeListing {
            shape: "3,3",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,4},{3,5,6})",
                        "({2,3,5},{1,4,6})",
                        "({3,4,6},{1,2,5})",
                        "({1,4,5},{2,3,6})",
                        "({2,5,6},{1,3,4})",
                        "({1,3,6},{2,4,5})",
                        "({2,3,6},{1,4,5})",
                        "({1,2,5},{3,4,6})",
                        "({1,4,6},{2,3,5})",
                        "({3,5,6},{1,2,4})",
                        "({2,4,5},{1,3,6})",
                        "({1,3,4},{2,5,6})",
                    ],
                ),
                (
                    "b",
                    &[
                        "({1,2,3},{4,5,6})",
                        "({2,3,4},{1,5,6})",
                        "({3,4,5},{1,2,6})",
                        "({4,5,6},{1,2,3})",
                        "({1,5,6},{2,3,4})",
                        "({1,2,6},{3,4,5})",
                    ],
                ),
                ("c", &["({1,3,5},{2,4,6})", "({2,4,6},{1,3,5})"]),
            ],
        },
        ShapeListing {
            shape: "4,1,1",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,4,5},{3},{6})",
                        "({2,3,5,6},{4},{1})",
                        "({1,3,4,6},{5},{2})",
                        "({1,2,4,5},{6},{3})",
                        "({2,3,5,6},{1},{4})",
                        "({1,3,4,6},{2},{5})",
                    ],
                ),
                (
                    "b",
                    &[
                        "({1,2,3,4},{5},{6})",
                        "({2,3,4,5},{6},{1})",
                        "({3,4,5,6},{1},{2})",
                        "({1,4,5,6},{2},{3})",
                        "({1,2,5,6},{3},{4})",
                        "({1,2,3,6},{4},{5})",
                        "({1,2,3,4},{6},{5})",
                        "({2,3,4,5},{1},{6})",
                        "({3,4,5,6},{2},{1})",
                        "({1,4,5,6},{3},{2})",
                        "({1,2,5,6},{4},{3})",
                        "({1,2,3,6},{5},{4})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,4,6},{3},{5})",
                        "({1,2,3,5},{4},{6})",
                        "({2,3,4,6},{5},{1})",
                        "({1,3,4,5},{6},{2})",
                        "({2,4,5,6},{3},{1})",
                        "({1,3,5,6},{4},{2})",
                        "({1,2,4,6},{5},{3})",
                        "({1,2,3,5},{6},{4})",
                        "({2,3,4,6},{1},{5})",
                        "({1,3,4,5},{2},{6})",
                        "({2,4,5,6},{1},{3})",
                        "({1,3,5,6},{2},{4})",
                    ],
                ),
            ],
        },
    ],
    digraphs: &[
        DigraphFixture {
            upper: "4,2",
            lower: "3,3",
            edges: &[("a", "a"), ("b", "a"), ("b", "b"), ("c", "a"), ("c", "b"), ("c", "c")],
        },
        DigraphFixture {
            upper: "4,2",
            lower: "4,1,1",
            edges: &[("a", "a"), ("b", "b"), ("c", "c")],
        },
    ],
    identifications: &[IdentificationFixture {
        shapes: &["4,2", "3,3", "4,1,1"],
        blocks: &[
            ("4,2", &[&["a"], &["b"], &["c"]]),
            ("3,3", &[&["a"], &["b"], &["c"]]),
            ("4,1,1", &[&["a"], &["b"], &["c"]]),
        ],
    }],
};

/// Rotation group of a six-site ring, cyclic of order 6.
pub const CYCLIC_SIX: SectionFixture = SectionFixture {
    name: "cyclic six",
    generators: &["(123456)"],
    listings: &[
        ShapeListing {
            shape: "4,2",
            orbits: &[
                (
                    "a",
                    &["({1,2,4,5},{3,6})", "({2,3,5,6},{1,4})", "({1,3,4,6},{2,5})"],
                ),
                (
                    "b",
                    &[
                        "({1,2,3,4},{5,6})",
                        "({2,3,4,5},{1,6})",
                        "({3,4,5,6},{1,2})",
                        "({1,4,5,6},{2,3})",
                        "({1,2,5,6},{3,4})",
                        "({1,2,3,6},{4,5})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,4,6},{3,5})",
                        "({1,2,3,5},{4,6})",
                        "({2,3,4,6},{1,5})",
                        "({1,3,4,5},{2,6})",
                        "({2,4,5,6},{1,3})",
                        "({1,3,5,6},{2,4})",
                    ],
                ),
            ],
        },
        ShapeListing {
            shape: "3,3",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,4},{3,5,6})",
                        "({2,3,5},{1,4,6})",
                        "({3,4,6},{1,2,5})",
                        "({1,4,5},{2,3,6})",
                        "({2,5,6},{1,3,4})",
                        "({1,3,6},{2,4,5})",
                    ],
                ),
                (
                    // the published first member carries a stray brace; the
                    // orbit is recomputed from the representative
                    "b",
                    &[
                        "({1,2,5},{3,4,6})",
                        "({2,3,6},{1,4,5})",
                        "({1,3,4},{2,5,6})",
                        "({2,4,5},{1,3,6})",
                        "({3,5,6},{1,2,4})",
                        "({1,4,6},{2,3,5})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,3},{4,5,6})",
                        "({2,3,4},{1,5,6})",
                        "({3,4,5},{1,2,6})",
                        "({4,5,6},{1,2,3})",
                        "({1,5,6},{2,3,4})",
                        "({1,2,6},{3,4,5})",
                    ],
                ),
                ("d", &["({1,3,5},{2,4,6})", "({2,4,6},{1,3,5})"]),
            ],
        },
        ShapeListing {
            shape: "4,1,1",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,4,5},{3},{6})",
                        "({2,3,5,6},{4},{1})",
                        "({1,3,4,6},{5},{2})",
                        "({1,2,4,5},{6},{3})",
                        "({2,3,5,6},{1},{4})",
                        "({1,3,4,6},{2},{5})",
                    ],
                ),
                (
                    "b",
                    &[
                        "({1,2,3,4},{5},{6})",
                        "({2,3,4,5},{6},{1})",
                        "({3,4,5,6},{1},{2})",
                        "({1,4,5,6},{2},{3})",
                        "({1,2,5,6},{3},{4})",
                        "({1,2,3,6},{4},{5})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,3,4},{6},{5})",
                        "({2,3,4,5},{1},{6})",
                        "({3,4,5,6},{2},{1})",
                        "({1,4,5,6},{3},{2})",
                        "({1,2,5,6},{4},{3})",
                        "({1,2,3,6},{5},{4})",
                    ],
                ),
                (
                    "d",
                    &[
                        "({1,2,4,6},{3},{5})",
                        "({1,2,3,5},{4},{6})",
                        "({2,3,4,6},{5},{1})",
                        "({1,3,4,5},{6},{2})",
                        "({2,4,5,6},{1},{3})",
                        "({1,3,5,6},{2},{4})",
                    ],
                ),
                (
                    "e",
                    &[
                        "({1,2,4,6},{5},{3})",
                        "({1,2,3,5},{6},{4})",
                        "({2,3,4,6},{1},{5})",
                        "({1,3,4,5},{2},{6})",
                        "({2,4,5,6},{3},{1})",
                        "({1,3,5,6},{4},{2})",
                    ],
                ),
            ],
        },
    ],
    digraphs: &[
        DigraphFixture {
            upper: "4,2",
            lower: "3,3",
            edges: &[
                ("a", "a"),
                ("a", "b"),
                ("b", "a"),
                ("b", "b"),
                ("b", "c"),
                ("c", "a"),
                ("c", "b"),
                ("c", "c"),
                ("c", "d"),
            ],
        },
        DigraphFixture {
            upper: "4,2",
            lower: "4,1,1",
            edges: &[("a", "a"), ("b", "b"), ("b", "c"), ("c", "d"), ("c", "e")],
        },
    ],
    identifications: &[
        IdentificationFixture {
            shapes: &["4,2", "3,3"],
            blocks: &[
                ("4,2", &[&["a"], &["b"], &["c"]]),
                ("3,3", &[&["a", "b"], &["c"], &["d"]]),
            ],
        },
        IdentificationFixture {
            shapes: &["4,2", "3,3", "4,1,1"],
            blocks: &[
                ("4,2", &[&["a"], &["b"], &["c"]]),
                ("3,3", &[&["a", "b"], &["c"], &["d"]]),
                ("4,1,1", &[&["a"], &["b", "c"], &["d", "e"]]),
            ],
        },
    ],
};

/// Twisted reflection group of order 6 (dihedral on three site pairs).
pub const DIHEDRAL_SIX: SectionFixture = SectionFixture {
    name: "dihedral six",
    generators: &["(123)(456)", "(14)(26)(35)"],
    listings: &[
        ShapeListing {
            shape: "4,2",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,3,4},{5,6})",
                        "({1,2,3,5},{4,6})",
                        "({1,2,3,6},{4,5})",
                        "({2,4,5,6},{1,3})",
                        "({3,4,5,6},{1,2})",
                        "({1,4,5,6},{2,3})",
                    ],
                ),
                (
                    "b",
                    &["({1,2,4,5},{3,6})", "({2,3,5,6},{1,4})", "({1,3,4,6},{2,5})"],
                ),
                (
                    "c",
                    &["({1,2,4,6},{3,5})", "({2,3,4,5},{1,6})", "({1,3,5,6},{2,4})"],
                ),
                (
                    "d",
                    &["({1,2,5,6},{3,4})", "({2,3,4,6},{1,5})", "({1,3,4,5},{2,6})"],
                ),
            ],
        },
        ShapeListing {
            shape: "3,3",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,4},{3,5,6})",
                        "({2,3,5},{1,4,6})",
                        "({1,3,6},{2,4,5})",
                        "({2,4,5},{1,3,6})",
                        "({3,5,6},{1,2,4})",
                        "({1,4,6},{2,3,5})",
                    ],
                ),
                (
                    "b",
                    &[
                        "({1,2,5},{3,4,6})",
                        "({2,3,6},{1,4,5})",
                        "({1,3,4},{2,5,6})",
                        "({1,4,5},{2,3,6})",
                        "({2,5,6},{1,3,4})",
                        "({3,4,6},{1,2,5})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,6},{3,4,5})",
                        "({2,3,4},{1,5,6})",
                        "({1,3,5},{2,4,6})",
                        "({3,4,5},{1,2,6})",
                        "({1,5,6},{2,3,4})",
                        "({2,4,6},{1,3,5})",
                    ],
                ),
                ("d", &["({1,2,3},{4,5,6})", "({4,5,6},{1,2,3})"]),
            ],
        },
        ShapeListing {
            shape: "4,1,1",
            orbits: &[
                (
                    "a",
                    &[
                        "({1,2,3,4},{5},{6})",
                        "({1,2,3,5},{6},{4})",
                        "({1,2,3,6},{4},{5})",
                        "({2,4,5,6},{1},{3})",
                        "({3,4,5,6},{2},{1})",
                        "({1,4,5,6},{3},{2})",
                    ],
                ),
                (
                    "b",
                    &[
                        "({1,2,3,4},{6},{5})",
                        "({1,2,3,5},{4},{6})",
                        "({1,2,3,6},{5},{4})",
                        "({2,4,5,6},{3},{1})",
                        "({3,4,5,6},{1},{2})",
                        "({1,4,5,6},{2},{3})",
                    ],
                ),
                (
                    "c",
                    &[
                        "({1,2,4,5},{3},{6})",
                        "({2,3,5,6},{1},{4})",
                        "({1,3,4,6},{2},{5})",
                        "({1,2,4,5},{6},{3})",
                        "({2,3,5,6},{4},{1})",
                        "({1,3,4,6},{5},{2})",
                    ],
                ),
                (
                    "d",
                    &[
                        "({1,2,4,6},{3},{5})",
                        "({2,3,4,5},{1},{6})",
                        "({1,3,5,6},{2},{4})",
                        "({2,3,4,5},{6},{1})",
                        "({1,3,5,6},{4},{2})",
                        "({1,2,4,6},{5},{3})",
                    ],
                ),
                (
                    "e",
                    &[
                        "({1,2,5,6},{3},{4})",
                        "({2,3,4,6},{1},{5})",
                        "({1,3,4,5},{2},{6})",
                        "({1,3,4,5},{6},{2})",
                        "({1,2,5,6},{4},{3})",
                        "({2,3,4,6},{5},{1})",
                    ],
                ),
            ],
        },
    ],
    digraphs: &[
        DigraphFixture {
            upper: "4,2",
            lower: "3,3",
            edges: &[
                ("a", "a"),
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "a"),
                ("b", "b"),
                ("c", "a"),
                ("c", "c"),
                ("d", "b"),
                ("d", "c"),
            ],
        },
        DigraphFixture {
            upper: "4,2",
            lower: "4,1,1",
            edges: &[("a", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
        },
    ],
    identifications: &[
        IdentificationFixture {
            shapes: &["4,2", "3,3"],
            blocks: &[
                ("4,2", &[&["a"], &["b", "c", "d"]]),
                ("3,3", &[&["a", "b", "c"], &["d"]]),
            ],
        },
        IdentificationFixture {
            shapes: &["4,2", "3,3", "4,1,1"],
            blocks: &[
                ("4,2", &[&["a"], &["b", "c", "d"]]),
                ("3,3", &[&["a", "b", "c"], &["d"]]),
                ("4,1,1", &[&["a", "b"], &["c", "d", "e"]]),
            ],
        },
    ],
};

pub const SECTIONS: [&SectionFixture; 3] = [&ORDER_TWELVE, &CYCLIC_SIX, &DIHEDRAL_SIX];

impl SectionFixture {
    pub fn group(&self) -> PermGroup {
        PermGroup::from_cycle_strings(self.generators, 6).expect("fixture group")
    }

    pub fn listing(&self, shape: &str) -> &ShapeListing {
        self.listings
            .iter()
            .find(|listing| listing.shape == shape)
            .expect("fixture shape")
    }
}

pub fn parse_shape(text: &str) -> Partition {
    text.parse().expect("fixture shape parses")
}

pub fn parse_tabloid(text: &str) -> Tabloid {
    text.parse().expect("fixture tabloid parses")
}

/// Maps the listing's orbit letters to computed orbit indices through the
/// listed members. Every listed member set must equal the matched orbit's
/// member set exactly.
pub fn letter_to_orbit(listing: &ShapeListing, space: &OrbitSpace) -> BTreeMap<&'static str, usize> {
    assert_eq!(
        space.count(),
        listing.orbits.len(),
        "orbit count for shape {}",
        listing.shape
    );
    let mut map = BTreeMap::new();
    for (letter, members) in listing.orbits {
        let wanted: BTreeSet<Tabloid> = members.iter().map(|m| parse_tabloid(m)).collect();
        assert_eq!(wanted.len(), members.len(), "duplicate member in listing");
        let first = wanted.iter().next().expect("nonempty orbit");
        let index = space
            .orbit_index_of(first)
            .unwrap_or_else(|| panic!("member {first} not found in any computed orbit"));
        let computed: BTreeSet<Tabloid> =
            space.orbits()[index].members().iter().cloned().collect();
        assert_eq!(
            computed, wanted,
            "orbit {letter} of shape {} differs from the computed orbit",
            listing.shape
        );
        map.insert(*letter, index);
    }
    map
}

/// Computes the orbit space for one fixture shape.
pub fn fixture_space(section: &SectionFixture, shape: &str) -> OrbitSpace {
    orbit_space(&section.group(), &parse_shape(shape)).expect("fixture orbit space")
}
