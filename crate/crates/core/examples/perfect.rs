//! Build B̃^{2,s}, run every check and print one line per criterion.

use krcrystal::affine::AffineCrystal;
use krcrystal::verify::full_report;

fn main() -> Result<(), krcrystal::CrystalError> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let n = args.next().and_then(Result::ok).unwrap_or(4);
    let s = args.next().and_then(Result::ok).unwrap_or(2);
    let c = AffineCrystal::assemble(n, s, 5_000_000)?;
    println!("B^{{2,{s}}} of type D_{n}^(1): {} vertices", c.len());
    for check in full_report(&c)?.checks {
        println!("{:<20} {:?}", check.criterion, check.verdict);
    }
    Ok(())
}
