//! Consistency checks tying the cycle census to the orbit counts.
//!
//! For every shape λ of degree 6 the census-weighted fixed-point identity
//! must balance exactly:
//!
//! ```text
//! Σ_{ρ ≠ identity} g_ρ · fix(ρ, λ)  =  |G| · n_λ − |T_λ|
//! ```
//!
//! When a transitive group has a unique mono-substitution orbit, the census
//! vanishes on the five cycle types `(4,2)`, `(4,1,1)`, `(3,2,1)`,
//! `(3,1,1,1)` and `(2,1,1,1,1)`, each row of the system loses those terms,
//! and comparing the `(5,1)` and `(4,1,1)` rows pins down
//! `|G| · (n_(4,1,1) − 1) = 24`. The report records the residual of every
//! row, whether the reduced system applies, and the dominance inequality
//! `n_(4,2) ≤ n_(4,1,1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::orbits::{burnside_count, fixed_tabloid_count, orbit_space};
use crate::partition::{partitions_of, Partition};
use crate::perm::CycleType;

/// Residual of one row of the counting system.
#[derive(Clone, Debug, Serialize)]
pub struct SystemRow {
    pub shape: Partition,
    /// `|T_λ|`, the number of tabloids of the shape.
    pub tabloid_total: u64,
    /// `Σ_{ρ ≠ identity} g_ρ · fix(ρ, λ)`.
    pub census_side: i64,
    /// `|G| · n_λ − |T_λ|`.
    pub orbit_side: i64,
    /// `census_side − orbit_side`; zero when the row balances.
    pub residual: i64,
}

/// Check of the identity `|G| · (n_(4,1,1) − 1) = 24`, applicable when the
/// reduced system holds and the mono-substitution orbit is unique.
#[derive(Clone, Debug, Serialize)]
pub struct UniqueMonoIdentity {
    pub value: i64,
    pub holds: bool,
}

/// Full report of the degree-6 counting system for one group.
#[derive(Clone, Debug, Serialize)]
pub struct SystemReport {
    pub group: PermGroup,
    pub rows: Vec<SystemRow>,
    /// True when the census vanishes on the five cycle types that the
    /// reduced system omits, so each row is literally the reduced row.
    pub reduced_system: bool,
    /// Present when `n_(5,1) = 1` and the reduced system applies.
    pub unique_mono: Option<UniqueMonoIdentity>,
    /// `n_(4,2) ≤ n_(4,1,1)`, forced by dominance of the shapes.
    pub dominance_ok: bool,
    pub all_rows_zero: bool,
}

impl SystemReport {
    pub fn passed(&self) -> bool {
        self.all_rows_zero
            && self.dominance_ok
            && self.unique_mono.as_ref().is_none_or(|check| check.holds)
    }
}

/// The five cycle types whose census counts vanish for any transitive
/// degree-6 group with a unique mono-substitution orbit.
fn reduced_absent_types() -> Vec<CycleType> {
    ["4,2", "4,1,1", "3,2,1", "3,1,1,1", "2,1,1,1,1"]
        .iter()
        .map(|text| {
            let shape: Partition = text.parse().expect("valid parts");
            CycleType::new(shape.parts().to_vec()).expect("valid cycle type")
        })
        .collect()
}

/// Evaluates every row of the counting system for a degree-6 group.
pub fn system_report(group: &PermGroup) -> Result<SystemReport> {
    if group.degree() != 6 {
        return Err(Error::DegreeMismatch {
            expected: 6,
            found: group.degree(),
        });
    }
    let census = group.cycle_census();
    let order = group.order() as i64;
    let identity_type = CycleType::new(vec![1; 6]).expect("identity type");

    let mut rows = Vec::new();
    let mut all_rows_zero = true;
    let mut counts = std::collections::BTreeMap::new();
    for shape in partitions_of(6) {
        let tabloid_total = shape.tabloid_count();
        let orbit_count = burnside_count(group, &shape)?;
        counts.insert(shape.clone(), orbit_count);
        let census_side: i64 = census
            .entries()
            .filter(|(t, _)| **t != identity_type)
            .map(|(t, c)| c as i64 * fixed_tabloid_count(t, &shape) as i64)
            .sum();
        let orbit_side = order * orbit_count as i64 - tabloid_total as i64;
        let residual = census_side - orbit_side;
        all_rows_zero &= residual == 0;
        rows.push(SystemRow {
            shape,
            tabloid_total,
            census_side,
            orbit_side,
            residual,
        });
    }

    let reduced_system = reduced_absent_types()
        .iter()
        .all(|t| census.count(t) == 0);

    let shape_51: Partition = "5,1".parse().expect("shape");
    let shape_42: Partition = "4,2".parse().expect("shape");
    let shape_411: Partition = "4,1,1".parse().expect("shape");
    let unique_mono = if reduced_system && counts[&shape_51] == 1 {
        let value = order * (counts[&shape_411] as i64 - 1);
        Some(UniqueMonoIdentity {
            value,
            holds: value == 24,
        })
    } else {
        None
    };
    let dominance_ok = counts[&shape_42] <= counts[&shape_411];

    Ok(SystemReport {
        group: group.clone(),
        rows,
        reduced_system,
        unique_mono,
        dominance_ok,
        all_rows_zero,
    })
}

/// Row of the enumeration cross-check: the two counting routes for one shape.
#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckRow {
    pub shape: Partition,
    pub census_route: u64,
    pub enumeration_route: u64,
}

impl CrossCheckRow {
    pub fn agrees(&self) -> bool {
        self.census_route == self.enumeration_route
    }
}

/// Compares the census-weighted count against direct orbit enumeration for
/// every shape of the group's degree.
pub fn cross_check(group: &PermGroup) -> Result<Vec<CrossCheckRow>> {
    partitions_of(group.degree())
        .into_iter()
        .map(|shape| {
            let census_route = burnside_count(group, &shape)?;
            let enumeration_route = orbit_space(group, &shape)?.count() as u64;
            Ok(CrossCheckRow {
                shape,
                census_route,
                enumeration_route,
            })
        })
        .collect()
}
