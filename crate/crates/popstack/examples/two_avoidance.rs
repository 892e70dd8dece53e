//! Two-set avoidance: occurrences of forbidden patterns are excused when
//! they extend to an occurrence of a saving pattern.

use popstack::{subpermutation_at, two_avoids, two_contains, Av2Cache, AvoidancePair, Permutation};

fn set(patterns: &[Permutation]) -> String {
    let inner: Vec<String> = patterns.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

fn main() -> popstack::Result<()> {
    let pair = AvoidancePair::new(vec!["3241".parse()?], vec!["41352".parse()?])?;
    println!(
        "forbidden {}, saving {}\n",
        set(pair.forbidden()),
        set(pair.saving())
    );

    for text in ["143562", "152463"] {
        let host = text.parse()?;
        match two_contains(&host, &pair) {
            Some(w) => {
                let sub = subpermutation_at(&host, w.occurrence())?;
                println!("{host} 2-contains the pair:");
                println!(
                    "  {} at positions {} (values {sub})",
                    w.pattern(),
                    w.occurrence()
                );
                println!("  no saving occurrence covers those positions");
            }
            None => println!("{host} 2-avoids the pair"),
        }
    }

    // an empty saving set is classical avoidance
    let classical = AvoidancePair::classical(vec!["231".parse()?, "312".parse()?])?;
    let host = "2314".parse()?;
    println!(
        "\n{host} avoids {{231, 312}}: {}",
        two_avoids(&host, &classical)
    );

    // the cache memoizes verdicts by reduced form
    let mut cache = Av2Cache::new(pair);
    let mut avoiders = 0;
    for rank in 0..120 {
        if cache.two_avoids(&popstack::enumerate::unrank(5, rank)) {
            avoiders += 1;
        }
    }
    println!("\n{avoiders} of 120 length-5 permutations 2-avoid the pair");
    Ok(())
}
