//! Permutations of the sites `1..=d` in disjoint-cycle notation, and their
//! cycle types.
//!
//! Sites are numbered from 1 everywhere in the public interface. A
//! [`Permutation`] is an immutable `Copy` value; composition, inversion and
//! conjugation are pure functions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree. Site images are packed four bits apiece into a
/// single machine word, which caps the degree at 12.
pub const MAX_DEGREE: usize = 12;

/// A permutation of the sites `1..=degree`.
///
/// Stored as packed 0-based images, one nibble per site, most significant
/// nibble first. Two permutations of equal degree therefore compare in
/// lexicographic order of their image sequences.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    degree: u8,
    packed: u64,
}

#[inline]
fn shift(index: usize) -> u32 {
    ((MAX_DEGREE - 1 - index) * 4) as u32
}

impl Permutation {
    /// The identity permutation on `1..=degree`.
    pub fn identity(degree: usize) -> Permutation {
        assert!(
            (1..=MAX_DEGREE).contains(&degree),
            "degree {degree} outside 1..={MAX_DEGREE}"
        );
        let mut packed = 0u64;
        for i in 0..degree {
            packed |= (i as u64) << shift(i);
        }
        Permutation {
            degree: degree as u8,
            packed,
        }
    }

    /// Builds a permutation from its 1-based image sequence: `images[i]` is
    /// the image of site `i + 1`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let degree = images.len();
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: MAX_DEGREE,
            });
        }
        let mut seen = [false; MAX_DEGREE];
        let mut packed = 0u64;
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > degree {
                return Err(Error::ParseCycles {
                    position: i,
                    message: format!("image {img} outside 1..={degree}"),
                });
            }
            if seen[img - 1] {
                return Err(Error::ParseCycles {
                    position: i,
                    message: format!("image {img} repeated"),
                });
            }
            seen[img - 1] = true;
            packed |= ((img - 1) as u64) << shift(i);
        }
        Ok(Permutation {
            degree: degree as u8,
            packed,
        })
    }

    /// Number of sites acted on.
    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Image of the 1-based `site`.
    #[inline]
    pub fn image(&self, site: usize) -> usize {
        debug_assert!(site >= 1 && site <= self.degree());
        (((self.packed >> shift(site - 1)) & 0xF) as usize) + 1
    }

    /// The 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        (1..=self.degree()).map(|s| self.image(s)).collect()
    }

    /// Composition `self ∘ other`: the result maps `i` to `self(other(i))`.
    ///
    /// Panics when the degrees differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree, other.degree,
            "cannot compose permutations of degrees {} and {}",
            self.degree, other.degree
        );
        let mut packed = 0u64;
        for i in 0..self.degree() {
            let mid = ((other.packed >> shift(i)) & 0xF) as usize;
            let img = (self.packed >> shift(mid)) & 0xF;
            packed |= img << shift(i);
        }
        Permutation {
            degree: self.degree,
            packed,
        }
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut packed = 0u64;
        for i in 0..self.degree() {
            let img = ((self.packed >> shift(i)) & 0xF) as usize;
            packed |= (i as u64) << shift(img);
        }
        Permutation {
            degree: self.degree,
            packed,
        }
    }

    /// Conjugation `by ∘ self ∘ by⁻¹`. Preserves the cycle type.
    ///
    /// Panics when the degrees differ.
    pub fn conjugate(&self, by: &Permutation) -> Permutation {
        by.compose(self).compose(&by.inverse())
    }

    /// True for the identity.
    pub fn is_identity(&self) -> bool {
        *self == Permutation::identity(self.degree())
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> usize {
        self.cycle_type()
            .parts()
            .iter()
            .copied()
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Decomposition into cycles of length at least two. Each cycle starts at
    /// its smallest site; cycles are ordered by smallest site.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; MAX_DEGREE];
        let mut cycles = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next - 1] = true;
                cycle.push(next);
                next = self.image(next);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// The multiset of cycle lengths, fixed points included as parts of size
    /// one.
    pub fn cycle_type(&self) -> CycleType {
        let mut seen = [false; MAX_DEGREE];
        let mut parts = Vec::new();
        for start in 1..=self.degree() {
            if seen[start - 1] {
                continue;
            }
            let mut len = 1;
            seen[start - 1] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next - 1] = true;
                len += 1;
                next = self.image(next);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Parses disjoint-cycle notation over sites `1..=degree`.
    ///
    /// Sites inside a cycle may be separated by spaces or commas; when the
    /// degree is at most 9 a run of digits such as `(123456)` is also read one
    /// digit per site. `()` denotes the identity. Repeated or out-of-range
    /// sites are rejected with the byte position of the offending token.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
        if !(1..=MAX_DEGREE).contains(&degree) {
            return Err(Error::DegreeOutOfRange {
                degree,
                max: MAX_DEGREE,
            });
        }
        let bytes = text.as_bytes();
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut used = vec![false; degree];
        let mut pos = 0usize;
        let mut saw_cycle = false;

        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };

        skip_ws(&mut pos);
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(Error::ParseCycles {
                    position: pos,
                    message: format!("expected '(' , found {:?}", bytes[pos] as char),
                });
            }
            pos += 1;
            let mut sites: Vec<(usize, usize)> = Vec::new(); // (site, position)
            let mut separated = false;
            loop {
                skip_ws(&mut pos);
                if pos >= bytes.len() {
                    return Err(Error::ParseCycles {
                        position: pos,
                        message: "unterminated cycle".into(),
                    });
                }
                match bytes[pos] {
                    b')' => {
                        pos += 1;
                        break;
                    }
                    b',' => {
                        separated = true;
                        pos += 1;
                    }
                    b'0'..=b'9' => {
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        let token = &text[start..pos];
                        if pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                            separated = true;
                        }
                        if degree <= 9 && !separated && token.len() > 1 {
                            // digit-per-site form
                            for (off, ch) in token.bytes().enumerate() {
                                sites.push(((ch - b'0') as usize, start + off));
                            }
                        } else {
                            let site: usize =
                                token.parse().map_err(|_| Error::ParseCycles {
                                    position: start,
                                    message: format!("invalid site {token:?}"),
                                })?;
                            sites.push((site, start));
                        }
                    }
                    other => {
                        return Err(Error::ParseCycles {
                            position: pos,
                            message: format!("unexpected character {:?}", other as char),
                        });
                    }
                }
            }
            for &(site, at) in &sites {
                if site == 0 || site > degree {
                    return Err(Error::ParseCycles {
                        position: at,
                        message: format!("site {site} outside 1..={degree}"),
                    });
                }
                if used[site - 1] {
                    return Err(Error::ParseCycles {
                        position: at,
                        message: format!("site {site} repeated"),
                    });
                }
                used[site - 1] = true;
            }
            for k in 0..sites.len() {
                let from = sites[k].0;
                let to = sites[(k + 1) % sites.len()].0;
                images[from - 1] = to;
            }
            saw_cycle = true;
            skip_ws(&mut pos);
        }
        if !saw_cycle {
            return Err(Error::ParseCycles {
                position: 0,
                message: "empty input; use \"()\" for the identity".into(),
            });
        }
        Permutation::from_images(&images)
    }

    fn format_cycles(&self, include_fixed: bool) -> String {
        let cycles = self.cycles();
        let mut out = String::new();
        let sep = if self.degree() <= 9 { "" } else { " " };
        for cycle in &cycles {
            out.push('(');
            for (k, site) in cycle.iter().enumerate() {
                if k > 0 {
                    out.push_str(sep);
                }
                out.push_str(&site.to_string());
            }
            out.push(')');
        }
        if include_fixed {
            for site in 1..=self.degree() {
                if self.image(site) == site {
                    out.push('(');
                    out.push_str(&site.to_string());
                    out.push(')');
                }
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }

    /// Cycle notation with the fixed points written out, e.g. `(12)(3)(4)`.
    pub fn to_string_with_fixed_points(&self) -> String {
        self.format_cycles(true)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation omitting fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles(false))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({}, d={})", self, self.degree)
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    /// Orders by degree, then lexicographically by image sequence.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.packed.cmp(&other.packed))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A cycle type: the weakly decreasing multiset of cycle lengths of a
/// permutation, summing to its degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from parts, which must be positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<CycleType> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidPartition(
                "cycle type parts must be positive".into(),
            ));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "cycle type parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(CycleType { parts })
    }

    /// The cycle lengths, longest first.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts; the degree of any permutation with this type.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// A canonical permutation of this type: cycles laid out consecutively on
    /// `1..=degree`, longest first.
    pub fn representative(&self) -> Permutation {
        let degree = self.degree();
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut next = 1usize;
        for &len in &self.parts {
            for k in 0..len {
                images[next + k - 1] = next + (k + 1) % len;
            }
            next += len;
        }
        Permutation::from_images(&images).expect("representative is a bijection")
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self)
    }
}
