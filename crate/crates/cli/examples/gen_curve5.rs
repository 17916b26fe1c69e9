//! Emit a pseudorandom pointed genus-5 record on stdout: a normal form
//! moved by a random change of coordinates, so consumers exercise the full
//! normalization path. An optional argument selects the seed.

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0u64);
    let curve = fibkit_core::curve5::random_curve(seed);
    print!("{}", fibkit_cli::format::print_curve5(&curve));
}
