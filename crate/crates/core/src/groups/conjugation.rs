use super::finite::{is_normal, FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};

/// The automorphism `n -> g n g^{-1}` of `kN`, on the basis indexed by the
/// sorted elements of `N`.
pub fn conjugation_on_subalgebra(
    g: &FiniteGroup,
    n: &Subgroup,
    x: usize,
    field: &Field,
) -> Result<Matrix> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let d = n.order();
    let mut m = Matrix::zeros(field, d, d);
    for (i, &y) in n.elements().iter().enumerate() {
        let j = n.position(g.conj(x, y)).expect("normal subgroup");
        m.set(j, i, 1);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::group_algebra;
    use crate::groups::Perm;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(
            "S3",
            &[
                Perm::from_cycles(3, &[vec![1, 2]]).unwrap(),
                Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn transposition_inverts_a3() {
        let g = s3();
        let f = Field::new(3, 1).unwrap();
        let t = g.index_of(&Perm::from_cycles(3, &[vec![1, 2]]).unwrap()).unwrap();
        let r = g.index_of(&Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap()).unwrap();
        let a3 = Subgroup::generated(&g, "A3", &[r]);
        let c = conjugation_on_subalgebra(&g, &a3, t, &f).unwrap();
        let i = a3.position(r).unwrap();
        let j = a3.position(g.inv(r)).unwrap();
        assert_eq!(c.get(j, i), 1);
        assert!(conjugation_on_subalgebra(&g, &a3, 0, &f).unwrap().is_identity());
        // inner automorphism permutes the basis
        let inner = conjugation_on_subalgebra(&g, &a3, r, &f).unwrap();
        assert!(inner.is_identity());
    }

    #[test]
    fn composition_law_and_automorphism() {
        let g = s3();
        let f = Field::new(2, 1).unwrap();
        let r = g.index_of(&Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap()).unwrap();
        let a3 = Subgroup::generated(&g, "A3", &[r]);
        let kn = group_algebra(&Arc::new(a3.as_group(&g)), &f);
        for x in 0..g.order() {
            let cx = conjugation_on_subalgebra(&g, &a3, x, &f).unwrap();
            for y in 0..g.order() {
                let cy = conjugation_on_subalgebra(&g, &a3, y, &f).unwrap();
                let cxy = conjugation_on_subalgebra(&g, &a3, g.mul(x, y), &f).unwrap();
                assert_eq!(cx.mul(&cy), cxy);
            }
            for i in 0..3 {
                for j in 0..3 {
                    let lhs = cx.mul_vec(&kn.mul(&kn.basis_vec(i), &kn.basis_vec(j)));
                    let rhs = kn.mul(&cx.col(i), &cx.col(j));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn rejects_non_normal() {
        let g = s3();
        let f = Field::new(2, 1).unwrap();
        let t = g.generators()[0];
        let h = Subgroup::generated(&g, "T", &[t]);
        assert_eq!(conjugation_on_subalgebra(&g, &h, 1, &f).unwrap_err(), Error::NotNormal);
    }
}
