// Every named group family, built from its text spec.

use growthlab::GroupSpec;

fn main() -> growthlab::Result<()> {
    let specs = [
        "sym 5",
        "alt 6",
        "cyclic 12",
        "dihedral 7",
        "psl2 11",
        "wreath 3 4",
        "deleted 3 5",
        "product alt 5 ; cyclic 4",
    ];
    for text in specs {
        let spec: GroupSpec = text.parse()?;
        let g = spec.build()?;
        println!(
            "{:<26} degree {:>3}  order {:>6}  perfect {}",
            spec.to_string(),
            g.degree(),
            g.order(),
            g.is_perfect()
        );
        assert_eq!(g.order(), spec.expected_order());
    }
    Ok(())
}
