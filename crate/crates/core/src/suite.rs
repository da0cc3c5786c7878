//! Named group collections used by the scans and the reproduction run.

use crate::group::{
    central_product, cyclic, cyclic_action, dicyclic, dihedral, direct_product, metacyclic,
    semidirect_product, Group,
};
use crate::formats::parse_group;

#[derive(Debug, Clone)]
pub struct NamedGroup {
    pub id: String,
    pub group: Group,
    /// Listed as an exception: the k = 2 union bound is expected to be at
    /// least 1.
    pub expected_exception: bool,
}

impl NamedGroup {
    pub fn new(id: impl Into<String>, group: Group) -> Self {
        let id = id.into();
        let expected_exception = is_listed_exception(&id, &group);
        NamedGroup { id, group, expected_exception }
    }
}

const LISTED: [&str; 12] = [
    "D6", "D8", "Q8", "D10", "D12", "Q12", "D14", "D6xZ3", "D8xZ3", "Q8xZ3", "D8oD8", "D8oQ8",
];

/// Membership in the exception lists: the named small groups, the two
/// extraspecial groups of order 32, and every non-abelian group of order 16.
/// The `S3` fixture is `D6` under another name.
pub fn is_listed_exception(id: &str, group: &Group) -> bool {
    LISTED.contains(&id) || id == "S3" || (group.order() == 16 && !group.is_abelian())
}

/// The non-identity element of a centre of order 2.
fn central_involution(g: &Group) -> usize {
    let z = g.center();
    assert_eq!(z.len(), 2, "centre must have order 2");
    z.members()[1]
}

fn must(r: Result<Group, crate::group::GroupError>) -> Group {
    r.expect("built-in construction is valid")
}

pub fn d8_central_d8() -> Group {
    let d8 = must(dihedral(4));
    let z = central_involution(&d8);
    must(central_product(&d8, &d8, z, z))
}

pub fn d8_central_q8() -> Group {
    let (d8, q8) = (must(dihedral(4)), must(dicyclic(2)));
    must(central_product(&d8, &q8, central_involution(&d8), central_involution(&q8)))
}

/// The nine non-abelian groups of order 16.
pub fn order16_groups() -> Vec<NamedGroup> {
    let z2 = must(cyclic(2));
    let z4 = must(cyclic(4));
    let inversion: Vec<usize> = (0..4).map(|i| (4 - i) % 4).collect();
    let c4_c4 = must(semidirect_product(&z4, &z4, &cyclic_action(&z4, 4, &inversion)));
    let klein = must(direct_product(&z2, &z2));
    // (a, b) at index 2a + b; the generator swaps the coordinates
    let klein_c4 = must(semidirect_product(&klein, &z4, &cyclic_action(&klein, 4, &[0, 2, 1, 3])));
    let d8 = must(dihedral(4));
    let pauli = must(central_product(&z4, &d8, 2, central_involution(&d8)));
    vec![
        NamedGroup::new("D16", must(dihedral(8))),
        NamedGroup::new("SD16", must(metacyclic(8, 3))),
        NamedGroup::new("Q16", must(dicyclic(4))),
        NamedGroup::new("M16", must(metacyclic(8, 5))),
        NamedGroup::new("D8xZ2", must(direct_product(&d8, &z2))),
        NamedGroup::new("Q8xZ2", must(direct_product(&must(dicyclic(2)), &z2))),
        NamedGroup::new("Z4:Z4", c4_c4),
        NamedGroup::new("Z2^2:Z4", klein_c4),
        NamedGroup::new("Z4oD8", pauli),
    ]
}

pub fn small_products() -> Vec<NamedGroup> {
    let z3 = must(cyclic(3));
    vec![
        NamedGroup::new("D6xZ3", must(direct_product(&must(dihedral(3)), &z3))),
        NamedGroup::new("D8xZ3", must(direct_product(&must(dihedral(4)), &z3))),
        NamedGroup::new("Q8xZ3", must(direct_product(&must(dicyclic(2)), &z3))),
    ]
}

pub fn extraspecial_32() -> Vec<NamedGroup> {
    vec![NamedGroup::new("D8oD8", d8_central_d8()), NamedGroup::new("D8oQ8", d8_central_q8())]
}

pub fn fixture_groups() -> Vec<NamedGroup> {
    [("S3", include_str!("../fixtures/s3.cay")), ("A4", include_str!("../fixtures/a4.cay"))]
        .into_iter()
        .map(|(id, text)| NamedGroup::new(id, parse_group(text).expect("bundled fixture parses")))
        .collect()
}

pub fn dihedral_named(n: usize) -> NamedGroup {
    NamedGroup::new(format!("D{}", 2 * n), must(dihedral(n)))
}

pub fn dicyclic_named(m: usize) -> NamedGroup {
    NamedGroup::new(format!("Q{}", 4 * m), must(dicyclic(m)))
}

/// Groups whose vertex pairs are checked against the common-neighbour bound.
pub fn common_neighbor_suite() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = (3..=16).map(dihedral_named).collect();
    out.extend((2..=8).map(dicyclic_named));
    out.extend(order16_groups().into_iter().filter(|g| g.id != "D16" && g.id != "Q16"));
    out.extend(small_products());
    out.extend(extraspecial_32());
    out.extend(fixture_groups());
    out
}

/// Every built-in non-abelian group of order below 114: dihedral and
/// dicyclic groups up to order 112, the order-16 groups, the small direct
/// products, the order-32 central products and the fixtures. Each
/// isomorphism type built from a family appears once.
pub fn scan_suite() -> Vec<NamedGroup> {
    let mut out: Vec<NamedGroup> = (3..=56).map(dihedral_named).collect();
    out.extend((2..=28).map(dicyclic_named));
    out.extend(order16_groups().into_iter().filter(|g| g.id != "D16" && g.id != "Q16"));
    out.extend(small_products());
    out.extend(extraspecial_32());
    out.extend(fixture_groups());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    // order statistics plus centre size and number of commuting pairs
    fn signature(g: &Group) -> (BTreeMap<usize, usize>, usize, usize) {
        let mut orders = BTreeMap::new();
        for x in 0..g.order() {
            *orders.entry(g.element_order(x)).or_insert(0) += 1;
        }
        let commuting = (0..g.order()).map(|x| g.centralizer(x).len()).sum();
        (orders, g.center().len(), commuting)
    }

    #[test]
    fn order16_groups_are_distinct_and_nonabelian() {
        let groups = order16_groups();
        assert_eq!(groups.len(), 9);
        for g in &groups {
            assert_eq!(g.group.order(), 16, "{}", g.id);
            assert!(!g.group.is_abelian());
            assert!(g.expected_exception);
        }
        let sigs: Vec<_> = groups.iter().map(|g| signature(&g.group)).collect();
        for i in 0..sigs.len() {
            for j in i + 1..sigs.len() {
                if sigs[i] == sigs[j] {
                    // same statistics: must differ in something finer
                    let (a, b) = (&groups[i].group, &groups[j].group);
                    let sq = |g: &Group| (0..16).map(|x| g.mul(x, x)).collect::<std::collections::BTreeSet<_>>().len();
                    assert_ne!(sq(a), sq(b), "{} vs {}", groups[i].id, groups[j].id);
                }
            }
        }
    }

    #[test]
    fn extraspecial_involution_counts() {
        let count = |g: &Group| (1..g.order()).filter(|&x| g.element_order(x) == 2).count();
        assert_eq!(count(&d8_central_d8()), 19);
        assert_eq!(count(&d8_central_q8()), 11);
        for g in extraspecial_32() {
            assert_eq!(g.group.center().len(), 2);
        }
    }

    #[test]
    fn fixtures_load() {
        let f = fixture_groups();
        assert_eq!(f[0].group.order(), 6);
        assert_eq!(f[1].group.order(), 12);
        assert_eq!(f[1].group.center().len(), 1);
        assert!(f[0].expected_exception && !f[1].expected_exception);
    }

    #[test]
    fn suites_are_nonabelian_with_unique_ids() {
        for suite in [common_neighbor_suite(), scan_suite()] {
            let mut ids = std::collections::HashSet::new();
            for g in &suite {
                assert!(!g.group.is_abelian(), "{}", g.id);
                assert!(ids.insert(g.id.clone()), "{}", g.id);
                assert!(g.group.order() < 114);
            }
        }
        let exceptions = scan_suite().iter().filter(|g| g.expected_exception).count();
        assert_eq!(exceptions, 12 + 9 + 1);
    }
}
