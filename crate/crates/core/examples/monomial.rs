// Monomiality, quasirandomness and class counts.

use growthlab::characters::{class_count, is_monomial, quasirandomness_eps};
use growthlab::GroupSpec;

fn main() -> growthlab::Result<()> {
    for text in ["sym 4", "alt 4", "alt 5", "dihedral 7", "psl2 7", "wreath 2 3"] {
        let g = text.parse::<GroupSpec>()?.build()?;
        println!(
            "{text:<12} monomial {:<5}  eps {:.4}  k(G) {}",
            is_monomial(&g)?,
            quasirandomness_eps(&g)?,
            class_count(&g)?
        );
    }
    Ok(())
}
