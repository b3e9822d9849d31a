//! ½ℤ-graded Lie superalgebras: generators, the built-in catalog, explicit
//! structure-constant tables, and window checks of the super-bracket axioms.

mod catalog;
mod checks;
mod halfint;
mod presentation;
mod table;

pub use catalog::{catalog_build, named, orw, CatalogAlgebra, CATALOG_NAMES};
pub use checks::{
    check_antisymmetry, check_degree_additivity, check_super_jacobi, jacobi_residual,
    AntisymmetryReport, AntisymmetryViolation, JacobiReport, JacobiViolation,
};
pub use halfint::HalfInt;
pub use presentation::{
    koszul, AlgebraPresentation, BracketResult, DegreeWindow, Family, GeneratorRef, Lattice, Parity,
};
pub use table::TableEntry;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn vir_and_orw_pass_window_checks() {
        let vir = named("vir");
        assert!(check_antisymmetry(&vir, DegreeWindow::degrees(-5, 5)).passed());
        assert!(check_super_jacobi(&vir, DegreeWindow::degrees(-4, 4)).passed());
        let l = orw(rat(-1, 2), 1);
        assert!(check_antisymmetry(&l, DegreeWindow::degrees(-4, 4)).passed());
        assert!(check_super_jacobi(&l, DegreeWindow::degrees(-3, 3)).passed());
        assert!(check_super_jacobi(&named("q"), DegreeWindow::degrees(-3, 3)).passed());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let fams = vec![Family::new("L", Parity::Even, Lattice::Integral)];
        let l = |n| GeneratorRef::new(0, HalfInt::int(n));
        let entries = vec![
            TableEntry { x: l(1), y: l(2), result: BracketResult::single(int(1), l(3)) },
            TableEntry { x: l(2), y: l(1), result: BracketResult::single(int(1), l(3)) },
        ];
        let alg = AlgebraPresentation::from_table("bad", fams, DegreeWindow::degrees(-3, 3), entries).unwrap();
        let rep = check_antisymmetry(&alg, DegreeWindow::degrees(-3, 3));
        // one unordered pair, seen from both sides
        assert_eq!(rep.violations.len(), 2);
        assert_eq!(rep.violations[0].x, "L[1]");
        assert_eq!(rep.violations[0].y, "L[2]");
        assert_eq!(rep.violations[0].xy, "1 * L[3]");
    }

    #[test]
    fn table_rejects_non_additive_rows() {
        let fams = vec![Family::new("L", Parity::Even, Lattice::Integral)];
        let l = |n| GeneratorRef::new(0, HalfInt::int(n));
        let entries = vec![TableEntry { x: l(1), y: l(2), result: BracketResult::single(int(1), l(2)) }];
        assert!(AlgebraPresentation::from_table("bad", fams, DegreeWindow::degrees(-3, 3), entries).is_err());
    }

    #[test]
    fn degree_additivity_holds_for_catalog() {
        for name in ["vir", "witt", "q", "bms3", "sw22", "ns"] {
            assert!(check_degree_additivity(&named(name), DegreeWindow::degrees(-3, 3)).is_empty(), "{name}");
        }
    }

    #[test]
    fn odd_part_of_orw_is_abelian() {
        let l = orw(rat(-1, 2), 1);
        let gs: Vec<_> = l
            .generators_in(DegreeWindow::degrees(-4, 4))
            .into_iter()
            .filter(|g| l.parity(*g) == Parity::Odd)
            .collect();
        for &x in &gs {
            for &y in &gs {
                assert!(l.bracket(x, y).is_zero());
            }
        }
    }

    #[test]
    fn orw_even_part_matches_witt() {
        let w = named("witt");
        for eps in [0, 1] {
            let l = orw(rat(-1, 2), eps);
            let (lw, ll) = (w.family_id("L").unwrap(), l.family_id("L").unwrap());
            for m in -4..=4 {
                for n in -4..=4 {
                    if m + n == 0 {
                        continue; // central term is absent in Witt
                    }
                    let rw = w.bracket(GeneratorRef::new(lw, HalfInt::int(m)), GeneratorRef::new(lw, HalfInt::int(n)));
                    let rl = l.bracket(GeneratorRef::new(ll, HalfInt::int(m)), GeneratorRef::new(ll, HalfInt::int(n)));
                    assert_eq!(w.format_result(&rw), l.format_result(&rl));
                }
            }
        }
    }
}
