//! Quick unsortability proofs: an inversion spanning enough blocks rules
//! out k passes without simulating them.

use popstack::characterize::enumerate_unsortable;
use popstack::enumerate::DEFAULT_ENUM_LIMIT;
use popstack::{
    is_k_sortable, min_passes, unsortability_certificate, BlockDecomposition, Permutation,
};

fn describe(perm: &Permutation, k: usize) {
    let blocks = BlockDecomposition::of(perm);
    print!("{perm} (blocks {blocks}), k = {k}: ");
    match unsortability_certificate(perm, k) {
        Some((i, j)) => {
            let e = perm.entries();
            let span = blocks.block_index_of(j).unwrap() - blocks.block_index_of(i).unwrap() + 1;
            let word = if span == 1 { "block" } else { "blocks" };
            println!(
                "certificate ({}, {}): {} before {} spanning {span} {word}",
                i + 1,
                j + 1,
                e[i],
                e[j]
            );
        }
        None => println!("no certificate; {}-sortable: {}", k, is_k_sortable(perm, k)),
    }
}

fn main() -> popstack::Result<()> {
    // k = 0 passes: any inversion certifies
    describe(&"3241".parse()?, 0);
    // k = 1 pass: the inversion must span three blocks
    describe(&"41523".parse()?, 1);
    describe(&"214365".parse()?, 1);
    // the certificate is one-sided: 3241 resists two passes
    // (min_passes = 3) but no inversion spans the nine blocks required
    let stubborn: Permutation = "3241".parse()?;
    describe(&stubborn, 2);
    println!("min_passes({stubborn}) = {}\n", min_passes(&stubborn));

    let listed = enumerate_unsortable(1, 4, DEFAULT_ENUM_LIMIT)?;
    println!(
        "{} permutations of length <= 4 resist a single pass:",
        listed.len()
    );
    for q in listed {
        println!("  {q}");
    }
    Ok(())
}
