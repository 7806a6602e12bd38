// ab_n(G) tables, the largest abelian section and the normal-core chain.

use growthlab::constructors::symmetric;
use growthlab::growth::{ab_growth, abelianization_order, bab_chain_bound, largest_abelian_section, sub_growth};
use growthlab::{GroupSpec, Permutation};

fn main() -> growthlab::Result<()> {
    let s4 = symmetric(4);
    println!("|S4/S4'| = {}", abelianization_order(&s4));
    let ab = ab_growth(&s4, 24)?;
    println!("ab_n(S4) jumps: {:?}", ab.jumps);
    println!("dense: {:?}", ab.dense());
    println!("Sub_n(S4) jumps: {:?}", sub_growth(&s4, 24)?.jumps);

    let d8 = s4.subgroup_generated(&[Permutation::parse(4, "(0 1 2 3)")?, Permutation::parse(4, "(0 2)")?])?;
    let (lhs, rhs) = bab_chain_bound(&s4, &d8)?;
    println!("|D8/D8'| = {lhs} <= |G:N||N/N'| = {rhs}");

    let g = "deleted 3 5".parse::<GroupSpec>()?.build()?;
    println!("largest abelian section of V_5 ⋊ Alt(5) over F_3: {}", largest_abelian_section(&g)?);
    Ok(())
}
