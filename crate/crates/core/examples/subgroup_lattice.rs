// Conjugacy classes of subgroups, Sub_n, intermediate and normal subgroups.

use growthlab::constructors::symmetric;
use growthlab::subgroups::{
    count_subgroups, intermediate_subgroups, min_abelian_normal_index, normal_subgroups, subgroup_classes,
};

fn main() -> growthlab::Result<()> {
    let s4 = symmetric(4);
    let lattice = subgroup_classes(&s4, 24)?;
    println!("index order length");
    for c in &lattice.classes {
        println!("{:>5} {:>5} {:>6}", c.index, c.order, c.class_length);
    }
    println!("{} classes, {} subgroups", lattice.classes.len(), lattice.total_subgroups());
    for n in [1, 2, 3, 4, 6, 12, 24] {
        println!("Sub_{n}(S4) = {}", count_subgroups(&s4, n)?);
    }

    let y = s4.point_stabilizer(0)?;
    let above: Vec<u64> = intermediate_subgroups(&s4, &y, 24)?.iter().map(|h| h.order()).collect();
    println!("subgroups between Stab(0) and S4 have orders {above:?}");

    let normals: Vec<u64> = normal_subgroups(&s4)?.iter().map(|n| n.order()).collect();
    println!("normal subgroup orders {normals:?}");
    println!("min index of an abelian normal subgroup: {}", min_abelian_normal_index(&s4)?);
    Ok(())
}
