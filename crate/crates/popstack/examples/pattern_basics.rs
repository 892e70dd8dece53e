//! Classical pattern containment: reduction, occurrence search, and
//! occurrences forced through chosen positions.

use popstack::{contains, occurrences, occurrences_containing, subpermutation_at, Permutation};

fn main() -> popstack::Result<()> {
    let host: Permutation = "152463".parse()?;
    let pattern: Permutation = "3241".parse()?;

    println!("host    {host}");
    println!("pattern {pattern}");
    println!("contained: {}", contains(&pattern, &host));
    for occ in occurrences(&pattern, &host) {
        let sub = subpermutation_at(&host, &occ)?;
        println!("  at positions {occ}: values {sub}");
    }

    // values reduce to the pattern they realize
    let values = Permutation::new(vec![15, 2, 4, 6, 3])?;
    println!("\n{values} reduces to {}", values.reduce());

    // require position 2 (0-based 1) to be part of the occurrence
    let wide: Permutation = "251634".parse()?;
    let asc: Permutation = "123".parse()?;
    println!(
        "\n{wide} holds {} copies of {asc}; through its second entry:",
        occurrences(&asc, &wide).len()
    );
    for occ in occurrences_containing(&asc, &wide, &[1]) {
        println!("  positions {occ}");
    }
    Ok(())
}
