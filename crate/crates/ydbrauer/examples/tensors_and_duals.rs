//! The three tensor products and four duals, and the action shifts that
//! connect them: the tilde product is a shift of the hat product, and the
//! diamond duals are shifts of the star duals.

use ydbrauer::hopf::{sweedler, sweedler_phi, AutPair};
use ydbrauer::monoidal::{dual, tensor, tensor_tilde, DualFlavor, TensorKind};
use ydbrauer::yd::{build_h_alpha_beta, check_yd, shift, ShiftDirection};
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let pair = |a, b| -> Result<AutPair> {
        AutPair::new(sweedler_phi(&h, a)?, sweedler_phi(&h, b)?)
    };

    // Type one consumes the left beta, type two the left alpha; hat works
    // for any pair of pairs and multiplies them.
    let m = build_h_alpha_beta(&pair(2, 3)?)?;
    let n = build_h_alpha_beta(&pair(3, 4)?)?;
    let one = tensor(&m, &n, TensorKind::One)?;
    println!(
        "type one:  H_(2,3) (x) H_(3,4) -> dim {}, compatible {}",
        one.dim(),
        check_yd(&one)?.passed()
    );
    let n2 = build_h_alpha_beta(&pair(4, 2)?)?;
    let two = tensor(&m, &n2, TensorKind::Two)?;
    println!(
        "type two:  H_(2,3) (x) H_(4,2) -> dim {}, compatible {}",
        two.dim(),
        check_yd(&two)?.passed()
    );
    let hat = tensor(&m, &n2, TensorKind::Hat)?;
    println!(
        "hat:       H_(2,3) (x) H_(4,2) -> dim {}, compatible {}",
        hat.dim(),
        check_yd(&hat)?.passed()
    );
    println!("mismatched type one is refused: {}", tensor(&m, &n2, TensorKind::One).is_err());

    // tilde = hat shifted along the right factor's alpha.
    let tilde = tensor_tilde(&m, &n2)?;
    let shifted = shift(&hat, n2.pair().alpha(), ShiftDirection::F)?;
    println!("tilde == shift of hat: {}", tilde == shifted);

    // All four duals of a single module, and the star -> diamond shift.
    println!();
    for flavor in [
        DualFlavor::DiamondLeft,
        DualFlavor::DiamondRight,
        DualFlavor::StarLeft,
        DualFlavor::StarRight,
    ] {
        let d = dual(&m, flavor)?;
        println!("{flavor:?}: compatible {}", check_yd(&d)?.passed());
    }
    let by = m.pair().beta().inverse().compose(&m.pair().alpha().inverse())?;
    let left = shift(&dual(&m, DualFlavor::StarLeft)?, &by, ShiftDirection::F)?;
    let right = shift(&dual(&m, DualFlavor::StarRight)?, &by, ShiftDirection::F)?;
    println!(
        "diamonds are shifts of stars: {} {}",
        dual(&m, DualFlavor::DiamondLeft)? == left,
        dual(&m, DualFlavor::DiamondRight)? == right
    );
    Ok(())
}
