//! The parser must reject arbitrary junk gracefully: errors with
//! positions, never panics.

use fibkit_cli::format::parse_curve_file;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]
    #[test]
    fn parser_never_panics(input in "\\PC{0,200}") {
        let _ = parse_curve_file(&input);
    }
    #[test]
    fn parser_never_panics_on_structured_junk(
        lines in proptest::collection::vec("(curve5|curve6|quadric|point|base|sextic|v1|[0-9./ -]{0,12}| )", 0..20),
    ) {
        let _ = parse_curve_file(&lines.join("\n"));
    }
}
