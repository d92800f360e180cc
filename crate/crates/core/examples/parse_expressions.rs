//! The expression syntax shared with the `oqcalc` command line.

use qonsager::cli::parse;
use qonsager::freealg::Alphabet;

fn main() {
    let cases = [
        (Alphabet::Oq, "[W[0], W[1]]_q"),
        (Alphabet::Oq, "[W[0], W[1]]_q-1"),
        (Alphabet::Oq, "W[0]*W[0] - W[0]^2"),
        (Alphabet::Alt, "Gt[0]"),
        (Alphabet::Alt, "(q^2 - q^-2)^2 * W[-1] / (q + q^-1)"),
        (Alphabet::Ess, "W[2]"),
        (Alphabet::Ess, "Bd[2]"),
        (Alphabet::EssSigma, "tB[a0,1]"),
        (Alphabet::Z, "z[2]*z[1] + 3*z[3]"),
        (Alphabet::Oq, "W[2]"),
        (Alphabet::Alt, "W[0] * (G[1] +"),
    ];
    for (a, text) in cases {
        match parse(text, a) {
            Ok(x) => println!("{:>9} | {text}\n          = {x}", a.name()),
            Err(e) => println!("{:>9} | {text}\n          ! {e}", a.name()),
        }
    }
}
