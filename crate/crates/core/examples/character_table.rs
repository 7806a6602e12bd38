// An exact character table, printed with cyclotomic values.

use growthlab::characters::CharacterTable;
use growthlab::constructors::alternating;

fn main() -> growthlab::Result<()> {
    let ct = CharacterTable::new(&alternating(5))?;
    let classes = ct.classes();
    println!("prime {} exponent {}", ct.prime(), ct.exponent());
    print!("{:>10}", "");
    for (rep, size) in classes.reps.iter().zip(&classes.sizes) {
        print!("{:>22}", format!("{rep} [{size}]"));
    }
    println!();
    for (row, d) in ct.chars().iter().zip(ct.degrees()) {
        print!("{:>10}", format!("deg {d}"));
        for v in row {
            print!("{:>22}", v.to_string());
        }
        println!();
    }
    println!("orthogonal: {}", ct.orthogonality_holds());
    println!("sum of squared degrees: {} = |G| = {}", ct.sum_of_squared_degrees(), ct.order());
    Ok(())
}
