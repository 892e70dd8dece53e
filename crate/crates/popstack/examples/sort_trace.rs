//! Pass-by-pass pop-stack sorting: block decompositions, traces, and the
//! number of passes a permutation needs.

use popstack::{min_passes, pop_pass, sort_trace, sort_trace_bounded, BlockDecomposition};

fn main() -> popstack::Result<()> {
    let perm = "41352".parse()?;
    println!("sorting {perm}:");
    println!("{}", sort_trace(&perm));
    println!("needs {} passes\n", min_passes(&perm));

    // each pass reverses every maximal decreasing block
    let long = "87634521".parse()?;
    let blocks = BlockDecomposition::of(&long);
    println!("{long} splits into {blocks}");
    println!("one pass gives {}\n", pop_pass(&long));

    // a bounded trace stops early instead of sorting fully
    let stubborn = "3241".parse()?;
    println!("two passes on {stubborn}:");
    println!("{}", sort_trace_bounded(&stubborn, 2));
    println!(
        "still not sorted; it needs {} passes",
        min_passes(&stubborn)
    );
    Ok(())
}
