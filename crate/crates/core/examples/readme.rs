use spindex_core::clifford::{volume_element, CliffordElement};
use spindex_core::index::{equivariant_index, Classification, FixedPointDatum};
use spindex_core::scalar::{int, GaussianRational};
use spindex_core::spin::{chirality_split, kappa};
use spindex_core::twist::{closed_form_condition, oracle_condition, PowerProfile, TwistKind};
use spindex_core::weights::Structure;

fn main() -> spindex_core::Result<()> {
    let split = chirality_split(4)?;
    assert_eq!(split.vol_on_plus, GaussianRational::from_ints(-1, 0));

    let s = Structure::single(3, 2)?;
    let prof = PowerProfile::simple(&s, TwistKind::Exterior, 1, 0, 1, 0)?;
    assert!(closed_form_condition(&s, &prof)? && oracle_condition(&s, &prof)?);

    let fps = [
        FixedPointDatum::new("north", vec![int(1), int(1)], vec![]),
        FixedPointDatum::new("south", vec![int(1), int(-1)], vec![]),
    ];
    assert_eq!(equivariant_index(&fps)?.classification, Classification::Vanishes);

    let vol = kappa(&volume_element::<GaussianRational>(4)?)?;
    let e1 = kappa(&CliffordElement::<GaussianRational>::generator(4, 1)?)?;
    println!("κ(vol_4) is {}x{}; κ(e_1)² = -1: {}", vol.dim(), vol.dim(), e1.mul(&e1)?.as_scalar_multiple() == Some(GaussianRational::from_ints(-1, 0)));
    Ok(())
}
