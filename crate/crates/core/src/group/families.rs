//! Named group families. Element names are deterministic: powers of the
//! rotation generator followed by an optional reflection-like generator,
//! e.g. `e`, `r`, `r^2`, `s`, `r*s`, `r^2*s`.

use super::{Group, GroupError};

fn power_name(symbol: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => symbol.to_string(),
        _ => format!("{symbol}^{exp}"),
    }
}

/// Name of `x^i * y^flip` with `e` for the identity.
fn word(x: &str, i: usize, y: &str, flip: bool) -> String {
    match (power_name(x, i), flip) {
        (p, false) if p.is_empty() => "e".to_string(),
        (p, false) => p,
        (p, true) if p.is_empty() => y.to_string(),
        (p, true) => format!("{p}*{y}"),
    }
}

/// Groups of order `2m` on elements `x^i y^f` (`0 <= i < m`, `f` in {0,1}),
/// indexed `i + f*m`.
fn two_coset_group(
    m: usize,
    x: &str,
    y: &str,
    mul: impl Fn(usize, bool, usize, bool) -> (usize, bool),
) -> Result<Group, GroupError> {
    let order = 2 * m;
    let split = |k: usize| (k % m, k >= m);
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        let (i, f) = split(a);
        for b in 0..order {
            let (j, g) = split(b);
            let (k, h) = mul(i, f, j, g);
            table.push(k + if h { m } else { 0 });
        }
    }
    let names = (0..order).map(|k| word(x, k % m, y, k >= m)).collect();
    Group::from_flat(order, table, Some(names))
}

/// The cyclic group `Z_n`, elements `e, c, c^2, ...`.
pub fn cyclic(n: usize) -> Result<Group, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("cyclic group needs n >= 1".into()));
    }
    let table = (0..n).flat_map(|i| (0..n).map(move |j| (i + j) % n)).collect();
    let names = (0..n).map(|i| word("c", i, "", false)).collect();
    Group::from_flat(n, table, Some(names))
}

/// The dihedral group `D_{2n} = <r, s | r^n = s^2 = 1, srs = r^-1>`.
pub fn dihedral(n: usize) -> Result<Group, GroupError> {
    if n < 3 {
        return Err(GroupError::InvalidParameter("dihedral group needs n >= 3".into()));
    }
    metacyclic(n, n as i64 - 1)
}

/// The dicyclic (generalized quaternion for `m` a power of two) group
/// `Q_{4m} = <a, b | a^{2m} = 1, b^2 = a^m, bab^-1 = a^-1>`.
pub fn dicyclic(m: usize) -> Result<Group, GroupError> {
    if m < 2 {
        return Err(GroupError::InvalidParameter("dicyclic group needs m >= 2".into()));
    }
    let n = 2 * m;
    two_coset_group(n, "a", "b", |i, f, j, g| {
        // b a^j = a^-j b
        let j = if f { (n - j) % n } else { j };
        match (f, g) {
            (true, true) => ((i + j + m) % n, false),
            _ => ((i + j) % n, f ^ g),
        }
    })
}

/// `<r, s | r^m = s^2 = 1, srs = r^t>` of order `2m`; requires `t^2 = 1 (mod m)`.
pub fn metacyclic(m: usize, t: i64) -> Result<Group, GroupError> {
    if m == 0 {
        return Err(GroupError::InvalidParameter("metacyclic group needs m >= 1".into()));
    }
    let modulus = m as i64;
    let twist = t.rem_euclid(modulus) as usize;
    if (twist * twist) % m != 1 % m {
        return Err(GroupError::InvalidTwist { m: m as u64, t });
    }
    two_coset_group(m, "r", "s", |i, f, j, g| {
        // s r^j = r^{tj} s
        let j = if f { (twist * j) % m } else { j };
        ((i + j) % m, f ^ g)
    })
}
