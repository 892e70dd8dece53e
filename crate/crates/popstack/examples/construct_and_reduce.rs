//! Building a candidate (forbidden, saving) pair for two-pass sortability
//! and shrinking it with the redundancy lemmas.

use popstack::characterize::{
    construct_pair, reduce_pair, single_pass_pair, two_pass_pair, verify_pair, ConstructionConfig,
};
use popstack::enumerate::DEFAULT_ENUM_LIMIT;
use popstack::pairfile::render_pair;

fn main() -> popstack::Result<()> {
    let config = ConstructionConfig::new(2, 5, 6, Some(single_pass_pair()))?;
    let candidate = construct_pair(&config, DEFAULT_ENUM_LIMIT)?;
    println!(
        "constructed: {} forbidden, {} saving patterns",
        candidate.forbidden().len(),
        candidate.saving().len()
    );

    let reduced = reduce_pair(&candidate, 6, DEFAULT_ENUM_LIMIT)?;
    println!(
        "reduced:     {} forbidden, {} saving patterns\n",
        reduced.forbidden().len(),
        reduced.saving().len()
    );
    print!(
        "{}",
        render_pair(&reduced, &["after the redundancy lemmas".into()])
    );

    // the hand-picked pair is smaller still; both verify exactly
    let known = two_pass_pair();
    println!(
        "\nknown pair:  {} forbidden, {} saving patterns",
        known.forbidden().len(),
        known.saving().len()
    );
    for (name, pair) in [("reduced", &reduced), ("known", &known)] {
        let report = verify_pair(pair, 2, 7, DEFAULT_ENUM_LIMIT)?;
        println!(
            "{name} pair matches two-pass sortability up to length 7: {}",
            report.is_exact()
        );
    }
    Ok(())
}
