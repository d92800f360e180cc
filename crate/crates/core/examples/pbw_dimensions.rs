use std::time::Instant;

use qonsager::presentations::PresentationId;
use qonsager::quotient::build;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let p: PresentationId = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(PresentationId::AltFull);
    let d: u32 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(6);
    let t = Instant::now();
    let q = build(p, d, 0).unwrap();
    println!("{p} D={d}: {:?}", q.dims());
    println!("{}", q.stats());
    println!("{:?}", t.elapsed());
}
