//! The braiding c(m (x) n) = n_(0) (x) beta^-1(n_(1)) . m is an
//! isomorphism from M hat(x) N onto the twisted product, natural in both
//! arguments. Psi compares a hat product of left star duals with the left
//! star dual of the hat product by permuting basis functionals.

use ydbrauer::hopf::{sweedler, sweedler_phi, AutPair};
use ydbrauer::linalg::tensor_map;
use ydbrauer::monoidal::{braiding, psi};
use ydbrauer::yd::{build_h_alpha_beta, trivial_module, YDMorphism};
use ydbrauer::Result;

fn main() -> Result<()> {
    let h = sweedler(5)?;
    let pair = |a, b| -> Result<AutPair> {
        AutPair::new(sweedler_phi(&h, a)?, sweedler_phi(&h, b)?)
    };
    let m = build_h_alpha_beta(&pair(2, 3)?)?;
    let n = build_h_alpha_beta(&pair(3, 4)?)?;

    let c = braiding(&m, &n)?;
    println!("c_{{M,N}} is a module and comodule map: {}", c.morphism().is_morphism());
    println!("c_{{M,N}} is invertible:               {}", c.morphism().is_isomorphism());
    let round = c.inverse().compose(c.map())?;
    println!("inverse round-trips:                 {}", round.is_identity());

    // Naturality in maps of identity-pair modules: c (f (x) g) equals
    // (g (x) f) c. Diagonal maps on the trivial two-dimensional module
    // commute with both structures, so they make honest test morphisms.
    let t = trivial_module(&h, 2);
    let f = diagonal_morphism(&t, &[1, 2])?;
    let g = diagonal_morphism(&t, &[3, 1])?;
    let ct = braiding(&t, &t)?;
    let lhs = ct.map().compose(&tensor_map(f.map(), g.map()))?;
    let rhs = tensor_map(g.map(), f.map()).compose(ct.map())?;
    println!("naturality on diagonal morphisms:    {}", lhs == rhs);

    let comparison = psi(&m, &n)?;
    println!();
    println!("psi source dim {} -> target dim {}", comparison.source().dim(), comparison.target().dim());
    println!("psi is a morphism:     {}", comparison.is_morphism());
    println!("psi is an isomorphism: {}", comparison.is_isomorphism());
    Ok(())
}

/// A diagonal map on a module, packaged with the proof that it commutes
/// with action and coaction.
fn diagonal_morphism(t: &ydbrauer::yd::YDModule, entries: &[i64]) -> Result<YDMorphism> {
    let f = t.hopf().field();
    let mat = ydbrauer::linalg::MatrixExact::from_fn(f, t.dim(), t.dim(), |i, j| {
        if i == j { f.from_i64(entries[i]) } else { f.zero() }
    })?;
    YDMorphism::new(t.clone(), t.clone(), mat)
}
