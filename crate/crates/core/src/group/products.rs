use super::{Group, GroupError};

fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// `G x H` with element `(g, h)` at index `g * |H| + h`.
pub fn direct_product(g: &Group, h: &Group) -> Result<Group, GroupError> {
    let trivial: Vec<Vec<usize>> = (0..h.order()).map(|_| (0..g.order()).collect()).collect();
    build_semidirect(g, h, &trivial)
}

/// `N x| H` where `action[h]` is the automorphism of `N` (as a permutation of
/// element indices) by which `h` acts. Multiplication is
/// `(n1, h1)(n2, h2) = (n1 * action[h1](n2), h1 h2)` and the indexing matches
/// [`direct_product`].
pub fn semidirect_product(
    n: &Group,
    h: &Group,
    action: &[Vec<usize>],
) -> Result<Group, GroupError> {
    if action.len() != h.order() {
        return Err(GroupError::InvalidParameter(format!(
            "action has {} entries, acting group has order {}",
            action.len(),
            h.order()
        )));
    }
    for (element, phi) in action.iter().enumerate() {
        if !is_automorphism(n, phi) {
            return Err(GroupError::NotAutomorphism { element });
        }
    }
    for a in 0..h.order() {
        for b in 0..h.order() {
            let ab = h.mul(a, b);
            if (0..n.order()).any(|x| action[ab][x] != action[a][action[b][x]]) {
                return Err(GroupError::NotHomomorphism { a, b });
            }
        }
    }
    build_semidirect(n, h, action)
}

fn is_automorphism(g: &Group, phi: &[usize]) -> bool {
    let n = g.order();
    if phi.len() != n || phi.iter().any(|&x| x >= n) {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in phi {
        if std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| phi[g.mul(a, b)] == g.mul(phi[a], phi[b])))
}

fn build_semidirect(n: &Group, h: &Group, action: &[Vec<usize>]) -> Result<Group, GroupError> {
    let (on, oh) = (n.order(), h.order());
    let order = on * oh;
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (n1, h1) = (a / oh, a % oh);
        for b in 0..order {
            let (n2, h2) = (b / oh, b % oh);
            table.push(n.mul(n1, action[h1][n2]) * oh + h.mul(h1, h2));
        }
    }
    let names = (0..order).map(|a| pair_name(n.name(a / oh), h.name(a % oh))).collect();
    Group::from_flat(order, table, Some(names))
}

/// The action of `Z_k = <c>` on `n` with `c` acting by `generator`; entry `i`
/// is `generator^i`. Feed the result to [`semidirect_product`] together with
/// `cyclic(k)`, which rejects it if `generator^k` is not the identity.
pub fn cyclic_action(n: &Group, k: usize, generator: &[usize]) -> Vec<Vec<usize>> {
    let mut powers = Vec::with_capacity(k);
    let mut current: Vec<usize> = (0..n.order()).collect();
    for _ in 0..k {
        powers.push(current.clone());
        current = current.iter().map(|&x| generator.get(x).copied().unwrap_or(x)).collect();
    }
    powers
}

/// `(G x H) / <(zg, zh^-1)>` for central `zg`, `zh` of equal order.
///
/// Cosets are enumerated in index order of `G x H`, so every coset is
/// represented by its least element and the identity coset comes first.
/// Element names are those of the representatives.
pub fn central_product(g: &Group, h: &Group, zg: usize, zh: usize) -> Result<Group, GroupError> {
    for (grp, z) in [(g, zg), (h, zh)] {
        if z >= grp.order() {
            return Err(GroupError::InvalidParameter(format!("element {z} out of range")));
        }
        if !grp.is_central(z) {
            return Err(GroupError::NotCentral { element: z });
        }
    }
    let (kg, kh) = (g.element_order(zg), h.element_order(zh));
    if kg != kh {
        return Err(GroupError::OrderMismatch { left: kg, right: kh });
    }
    let product = direct_product(g, h)?;
    let generator = zg * h.order() + h.inverse(zh);
    let kernel: Vec<usize> = (0..kg).map(|i| product.pow(generator, i)).collect();

    let mut coset_of = vec![usize::MAX; product.order()];
    let mut reps = Vec::new();
    for x in 0..product.order() {
        if coset_of[x] == usize::MAX {
            for &k in &kernel {
                coset_of[product.mul(x, k)] = reps.len();
            }
            reps.push(x);
        }
    }
    let order = reps.len();
    let table = reps
        .iter()
        .flat_map(|&a| reps.iter().map(|&b| coset_of[product.mul(a, b)]).collect::<Vec<_>>())
        .collect();
    let names = reps.iter().map(|&r| product.name(r).to_string()).collect();
    Group::from_flat(order, table, Some(names))
}
