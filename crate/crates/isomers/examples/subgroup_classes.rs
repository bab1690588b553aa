//! Lists every conjugacy class of subgroups of the symmetric group on a
//! given number of sites, with order, census and a count table.
//!
//! Usage: `cargo run --release --example subgroup_classes -- 6`

use isomers::lattice::all_subgroups_up_to_conjugacy;
use isomers::orbits::burnside_count;
use isomers::partition::partitions_of;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let degree: usize = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("6")
        .parse()?;
    let classes = all_subgroups_up_to_conjugacy(degree)?;
    println!("degree {degree}: {} subgroup classes", classes.len());
    let shapes = partitions_of(degree);
    for class in &classes {
        let counts = shapes
            .iter()
            .map(|shape| Ok(format!("{}", burnside_count(class, shape)?)))
            .collect::<Result<Vec<_>, isomers::Error>>()?
            .join(" ");
        println!(
            "order {:<4} gens ⟨{}⟩  counts {}",
            class.order(),
            class.generator_strings().join(", "),
            counts
        );
    }
    Ok(())
}
