//! Emit a sample genus-6 record on stdout: marked point on the line
//! through base points 1 and 2 with `online`, on an exceptional curve is
//! not representable in the file format, generic otherwise.
use fibkit_cli::format::print_curve6;
use fibkit_core::genus6::{random_pointed_curve6, Placement, SurfacePoint};

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_default();
    let placement = match arg.as_str() {
        "online" => Placement::OnLine(0, 1),
        _ => Placement::Generic,
    };
    let curve = random_pointed_curve6(0, placement);
    let SurfacePoint::Plane(p) = &curve.point else {
        panic!()
    };
    print!(
        "{}",
        print_curve6(curve.surface.base_points(), &curve.sextic, p)
    );
}
