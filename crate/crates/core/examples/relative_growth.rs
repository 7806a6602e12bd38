// Growth relative to a fixed subgroup Y, and weak abnormality.

use growthlab::constructors::{cyclic, dihedral, symmetric};
use growthlab::growth::{ab_growth_rel, is_weakly_abnormal, rep_growth_rel};
use growthlab::PermGroup;

fn show(name: &str, g: &PermGroup, y: &PermGroup) -> growthlab::Result<()> {
    let n = g.order();
    println!("{name}, |Y| = {}", y.order());
    println!("  ab_n(G,Y) jumps  {:?}", ab_growth_rel(g, y, n)?.jumps);
    println!("  Rep_n(G,Y) jumps {:?}", rep_growth_rel(g, y, n)?.jumps);
    println!("  weakly abnormal  {}", is_weakly_abnormal(g, y)?);
    Ok(())
}

fn main() -> growthlab::Result<()> {
    let d7 = dihedral(7)?;
    show("D14 with a reflection", &d7, &d7.point_stabilizer(0)?)?;
    let s5 = symmetric(5);
    show("S5 with a point stabilizer", &s5, &s5.point_stabilizer(0)?)?;
    let c6 = cyclic(6);
    let two = c6.subgroup_generated(&[c6.generators()[0].pow(3)])?;
    show("C6 with its subgroup of order 2", &c6, &two)?;
    Ok(())
}
