// Permutations in cycle notation and the basic group operators.

use growthlab::{PermGroup, Permutation};

fn main() -> growthlab::Result<()> {
    let a = Permutation::parse(4, "(0 1 2 3)")?;
    let b = Permutation::parse(4, "(0 1)")?;
    // products read left to right: apply a, then b
    println!("a·b = {}", a.compose(&b));
    println!("a^-1 = {}, order {}", a.inverse(), a.order());

    let s4 = PermGroup::new(4, vec![a.clone(), b])?;
    println!("|<a, b>| = {}", s4.order());
    println!("contains (0 2)(1 3): {}", s4.contains(&Permutation::parse(4, "(0 2)(1 3)")?)?);
    println!("|S4'| = {}", s4.derived_subgroup().order());

    let v4 = s4.normal_closure(&[Permutation::parse(4, "(0 1)(2 3)")?])?;
    println!("normal closure of (0 1)(2 3): order {}", v4.order());

    let d8 = s4.subgroup_generated(&[a, Permutation::parse(4, "(0 2)")?])?;
    println!("|D8| = {}, core order {}", d8.order(), s4.normal_core(&d8)?.order());
    let (image, kernel) = s4.coset_action(&d8)?;
    println!(
        "S4 on the cosets of D8: {} points, image order {}, kernel order {}",
        image.degree(),
        image.order(),
        kernel.order()
    );
    println!("Z(S4) has order {}", s4.center()?.order());
    Ok(())
}
