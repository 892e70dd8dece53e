//! Barred patterns: occurrences of the unbarred part must extend to the
//! whole pattern, and how that differs from classical avoidance.

use popstack::{
    avoids_all, barred_avoids, has_occurrence_containing, occurrences, subpermutation_at,
    BarredPattern, Permutation,
};

fn main() -> popstack::Result<()> {
    let pattern: BarredPattern = "4 6! 3 1! 5 7 2".parse()?;
    let core = pattern.removebar().reduce();
    let full = pattern.unbar();
    println!("pattern        {pattern}");
    println!("unbarred part  {core}");
    println!("whole pattern  {full}");

    let host: Permutation = "4731562".parse()?;
    println!("\n{host} avoids it: {}", barred_avoids(&host, &pattern));
    for occ in occurrences(&core, &host) {
        if !has_occurrence_containing(&full, &host, occ.indices()) {
            let sub = subpermutation_at(&host, &occ)?;
            println!("  stranded copy at positions {occ}: values {sub}");
        }
    }

    // with no bars every occurrence of the unbarred part extends to itself,
    // so the barred test is vacuous even when classical containment is not
    let bare: BarredPattern = "21".parse()?;
    let host: Permutation = "21".parse()?;
    println!(
        "\n{host} barred-avoids bare {bare}: {}",
        barred_avoids(&host, &bare)
    );
    println!(
        "{host} classically avoids 21: {}",
        avoids_all(&host, &[bare.unbar()])
    );
    Ok(())
}
