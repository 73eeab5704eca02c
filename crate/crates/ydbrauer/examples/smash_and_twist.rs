//! Constructions on Yetter-Drinfeld algebras beyond End: smash products,
//! twisting by Hopf automorphisms, the two opposites, and the shift
//! invariances that make End algebras quasi-elementary.

use std::sync::Arc;

use ydbrauer::algebra::{
    opposite, smash, twist_algebra, verify_yd_algebra, OppositeKind, YDAlgebra,
};
use ydbrauer::endo::{coco_check, end_algebra, is_h_azumaya, p4_check, quasi_elementary_witness};
use ydbrauer::hopf::{
    cyclic_group_table, cyclic_labels, group_algebra, sweedler, sweedler_phi, AutPair,
    HopfAlgebra,
};
use ydbrauer::linalg::{FieldSpec, MatrixExact};
use ydbrauer::yd::{build_h_alpha_beta, YDModule};
use ydbrauer::Result;

/// The rank-one Clifford algebra as a graded algebra over kC2: basis
/// {1, x} with x^2 = 1, graded so that x sits in degree g.
fn graded_clifford(h: &Arc<HopfAlgebra>) -> Result<YDAlgebra> {
    let f = h.field();
    let minus_one = f.from_i64(-1);
    let action = MatrixExact::from_fn(f, 2, 4, |j, col| {
        let (t, i) = (col / 2, col % 2);
        match (j == i, t, i) {
            (false, _, _) => f.zero(),
            (true, 0, _) => f.one(),
            (true, _, 0) => f.one(),
            (true, _, _) => minus_one.clone(),
        }
    })?;
    let coaction = MatrixExact::from_fn(f, 4, 2, |row, i| {
        let (j, t) = (row / 2, row % 2);
        if j == i && t == i { f.one() } else { f.zero() }
    })?;
    let module = YDModule::new(Arc::clone(h), action, coaction, AutPair::identity(Arc::clone(h)))?;
    let mult = MatrixExact::from_fn(f, 2, 4, |k, col| {
        let (i, j) = (col / 2, col % 2);
        if (i + j) % 2 == k { f.one() } else { f.zero() }
    })?;
    let unit = MatrixExact::from_fn(f, 2, 1, |i, _| if i == 0 { f.one() } else { f.zero() })?;
    YDAlgebra::new(
        module,
        ydbrauer::linalg::LinearMapExact::new(mult),
        ydbrauer::linalg::LinearMapExact::new(unit),
    )
}

fn main() -> Result<()> {
    let kc2 = group_algebra(
        FieldSpec::prime(5)?,
        &cyclic_group_table(2),
        Some(cyclic_labels(2)),
    )?;
    let clifford = graded_clifford(&kc2)?;
    println!("graded Clifford algebra: axioms {}", verify_yd_algebra(&clifford)?.passed());
    println!("  H-Azumaya: {}", is_h_azumaya(&clifford)?);

    // The Azumaya property survives smash products and braided opposites.
    let squared = smash(&clifford, &clifford)?;
    println!("Clifford # Clifford: dim {}, H-Azumaya {}", squared.dim(), is_h_azumaya(&squared)?);
    let bar = opposite(&clifford, OppositeKind::HOpposite)?;
    println!("braided opposite:    dim {}, H-Azumaya {}", bar.dim(), is_h_azumaya(&bar)?);
    let plain = opposite(&clifford, OppositeKind::Plain)?;
    println!("plain opposite is still an algebra: {}", verify_yd_algebra(&plain)?.passed());

    // Over the Sweedler algebra: twisting composes contravariantly, End
    // commutes with conjugate twists, and End ignores shifts entirely.
    let h = sweedler(5)?;
    let phi = |l| sweedler_phi(&h, l);
    let m = build_h_alpha_beta(&AutPair::new(phi(2)?, phi(3)?)?)?;
    let end_m = end_algebra(&m)?;
    let mu = phi(2)?;
    let nu = phi(3)?;
    let twice = twist_algebra(&twist_algebra(&end_m, &nu)?, &mu)?;
    let once = twist_algebra(&end_m, &nu.compose(&mu)?)?;
    println!();
    println!("twist(twist(A, nu), mu) == twist(A, nu o mu): {}", twice == once);

    let by = AutPair::new(phi(4)?, phi(2)?)?;
    println!("End(conjugate twist of M) == twist of End(M): {}", p4_check(&m, &by)?);
    println!("End survives the shift by beta:               {}", coco_check(&m, m.pair().beta())?);

    let witness = quasi_elementary_witness(&m)?;
    println!(
        "quasi-elementary: carrier pair (id, ?) {}, End matches {}",
        witness.carrier().pair().alpha().is_identity(),
        witness.matches()
    );
    Ok(())
}
