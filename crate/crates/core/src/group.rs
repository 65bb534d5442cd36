//! Finite groups given by their Cayley tables.
//!
//! Elements are indices `0..order`, and index 0 is always the identity.
//! Every constructor goes through [`Group::from_cayley_table`], so the group
//! axioms are checked for built-in families as well as user tables.

use std::fmt;

use thiserror::Error;

/// Largest order accepted by any constructor (the order of S6).
pub const MAX_ORDER: usize = 720;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("order", &self.order())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Group {
    /// Validates a Cayley table and builds a group from it.
    ///
    /// `table[i][j]` is the index of `x_i * x_j`. If the identity is not at
    /// index 0 the elements are reordered (swapping the identity with index 0)
    /// and the labels follow. Labels default to the element indices.
    pub fn from_cayley_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Group, GroupError> {
        let s = table.len();
        if s == 0 {
            return Err(GroupError::NotAGroup("empty table".into()));
        }
        if s > MAX_ORDER {
            return Err(GroupError::BoundExceeded(format!(
                "order {s} exceeds the maximum of {MAX_ORDER}"
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != s {
                return Err(GroupError::NotAGroup(format!(
                    "row {i} has length {} but the table has {s} rows",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|&v| v >= s) {
                return Err(GroupError::NotAGroup(format!(
                    "entry ({i},{j}) = {} is not an element index",
                    row[j]
                )));
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != s {
                    return Err(GroupError::NotAGroup(format!(
                        "{} labels given for a table of order {s}",
                        l.len()
                    )));
                }
                for (i, a) in l.iter().enumerate() {
                    if let Some(j) = l[i + 1..].iter().position(|b| b == a) {
                        return Err(GroupError::NotAGroup(format!(
                            "label {a:?} used for elements {i} and {}",
                            i + 1 + j
                        )));
                    }
                }
                l
            }
            None => (0..s).map(|i| i.to_string()).collect(),
        };

        let identity = (0..s)
            .find(|&e| (0..s).all(|j| table[e][j] == j && table[j][e] == j))
            .ok_or_else(|| GroupError::NotAGroup("no two-sided identity element".into()))?;

        // Latin square check before associativity so the error is specific.
        let mut seen = vec![false; s];
        for i in 0..s {
            seen.iter_mut().for_each(|b| *b = false);
            for j in 0..s {
                if std::mem::replace(&mut seen[table[i][j]], true) {
                    return Err(GroupError::NotAGroup(format!(
                        "row {i} is not a permutation (value {} repeats)",
                        table[i][j]
                    )));
                }
            }
        }
        for j in 0..s {
            seen.iter_mut().for_each(|b| *b = false);
            for i in 0..s {
                if std::mem::replace(&mut seen[table[i][j]], true) {
                    return Err(GroupError::NotAGroup(format!(
                        "column {j} is not a permutation (value {} repeats)",
                        table[i][j]
                    )));
                }
            }
        }
        for i in 0..s {
            let row_i = &table[i];
            for j in 0..s {
                let ij = row_i[j];
                let row_j = &table[j];
                let row_ij = &table[ij];
                for k in 0..s {
                    if row_ij[k] != row_i[row_j[k]] {
                        return Err(GroupError::NotAGroup(format!(
                            "associativity fails for ({i}, {j}, {k})"
                        )));
                    }
                }
            }
        }

        // Swap the identity into index 0.
        let (table, labels) = if identity == 0 {
            (table, labels)
        } else {
            let relabel = |v: usize| {
                if v == identity {
                    0
                } else if v == 0 {
                    identity
                } else {
                    v
                }
            };
            let new_table = (0..s)
                .map(|i| (0..s).map(|j| relabel(table[relabel(i)][relabel(j)])).collect())
                .collect();
            let new_labels = (0..s).map(|i| labels[relabel(i)].clone()).collect();
            (new_table, new_labels)
        };

        let mut inverse = vec![0; s];
        for (i, inv) in inverse.iter_mut().enumerate() {
            // A Latin square with identity guarantees exactly one solution.
            *inv = table[i].iter().position(|&v| v == 0).expect("row contains identity");
            if table[*inv][i] != 0 {
                return Err(GroupError::NotAGroup(format!("element {i} has no two-sided inverse")));
            }
        }

        Ok(Group { table, inverse, labels })
    }

    /// Z/n with `table[i][j] = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Group, GroupError> {
        if n == 0 {
            return Err(GroupError::NotAGroup("cyclic group of order 0".into()));
        }
        if n > MAX_ORDER {
            return Err(GroupError::BoundExceeded(format!("cyclic({n}) exceeds order {MAX_ORDER}")));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Group::from_cayley_table(table, None)
    }

    /// Dihedral group of order `2n`; element `f*n + k` is `r^k s^f`.
    pub fn dihedral(n: usize) -> Result<Group, GroupError> {
        if n < 2 {
            return Err(GroupError::NotAGroup(format!("dihedral({n}) needs n >= 2")));
        }
        if 2 * n > MAX_ORDER {
            return Err(GroupError::BoundExceeded(format!(
                "dihedral({n}) exceeds order {MAX_ORDER}"
            )));
        }
        let idx = |k: usize, f: usize| f * n + k;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for f1 in 0..2 {
            for k1 in 0..n {
                for f2 in 0..2 {
                    for k2 in 0..n {
                        // r^k1 s^f1 r^k2 s^f2 = r^(k1 ± k2) s^(f1+f2), since s r = r^-1 s
                        let k = if f1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
                        table[idx(k1, f1)][idx(k2, f2)] = idx(k, (f1 + f2) % 2);
                    }
                }
            }
        }
        let rot = |k: usize| match k {
            0 => String::new(),
            1 => "r".to_string(),
            _ => format!("r^{k}"),
        };
        let labels = (0..2 * n)
            .map(|i| {
                let (k, f) = (i % n, i / n);
                match (k, f) {
                    (0, 0) => "e".to_string(),
                    (_, 0) => rot(k),
                    (_, _) => format!("{}s", rot(k)),
                }
            })
            .collect();
        Group::from_cayley_table(table, Some(labels))
    }

    /// Symmetric group on `n` letters, elements in lexicographic order of
    /// their one-line notation. The product is composition: `(a*b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> Result<Group, GroupError> {
        if n == 0 {
            return Err(GroupError::NotAGroup("symmetric(0) is not supported".into()));
        }
        if n > 6 {
            return Err(GroupError::BoundExceeded(format!("symmetric({n}) with n > 6")));
        }
        let perms = permutations(n);
        let index_of = |p: &[usize]| -> usize {
            // Lehmer code gives the lexicographic rank.
            let mut rank = 0;
            for i in 0..n {
                let smaller = p[i + 1..].iter().filter(|&&v| v < p[i]).count();
                rank = rank * (n - i) + smaller;
            }
            rank
        };
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| {
                        let c: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                        index_of(&c)
                    })
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| p.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(""))
            .collect();
        Group::from_cayley_table(table, Some(labels))
    }

    /// `g × h` with the pair `(a, b)` at index `a * |h| + b`.
    pub fn direct_product(g: &Group, h: &Group) -> Result<Group, GroupError> {
        let (m, n) = (g.order(), h.order());
        if m * n > MAX_ORDER {
            return Err(GroupError::BoundExceeded(format!(
                "direct product of orders {m} and {n} exceeds order {MAX_ORDER}"
            )));
        }
        let table = (0..m * n)
            .map(|p| {
                (0..m * n)
                    .map(|q| g.mul(p / n, q / n) * n + h.mul(p % n, q % n))
                    .collect()
            })
            .collect();
        let labels = (0..m * n)
            .map(|p| format!("({},{})", g.labels[p / n], h.labels[p % n]))
            .collect();
        Group::from_cayley_table(table, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Index of the element with the given label, if any.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Smallest `r >= 1` with `x_i^r = e`.
    pub fn element_order(&self, i: usize) -> Result<usize, GroupError> {
        if i >= self.order() {
            return Err(GroupError::IndexOutOfRange { index: i, order: self.order() });
        }
        let mut r = 1;
        let mut power = i;
        while power != 0 {
            power = self.mul(power, i);
            r += 1;
        }
        Ok(r)
    }

    pub fn is_abelian(&self) -> bool {
        let s = self.order();
        (0..s).all(|i| (0..s).all(|j| self.mul(i, j) == self.mul(j, i)))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // Lexicographic order via the standard next-permutation step.
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    while let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) {
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = Group::from_cayley_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn order_two_table() {
        let g = Group::from_cayley_table(vec![vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(g, Group::cyclic(2).unwrap());
    }

    #[test]
    fn rejects_non_latin_row() {
        let t = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        match Group::from_cayley_table(t, None) {
            Err(GroupError::NotAGroup(msg)) => assert!(msg.contains("row 1"), "{msg}"),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Latin square with identity 0 that is not associative (order 5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        match Group::from_cayley_table(t, None) {
            Err(GroupError::NotAGroup(msg)) => assert!(msg.contains("associativity"), "{msg}"),
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn rejects_missing_identity_and_bad_entries() {
        assert!(Group::from_cayley_table(vec![vec![1, 0], vec![0, 0]], None).is_err());
        assert!(Group::from_cayley_table(vec![vec![0, 2], vec![1, 0]], None).is_err());
        assert!(Group::from_cayley_table(vec![vec![0, 1]], None).is_err());
        assert!(Group::from_cayley_table(vec![], None).is_err());
    }

    #[test]
    fn identity_moved_to_index_zero() {
        // Z/3 written with the identity at index 2.
        let t = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let labels = vec!["a".to_string(), "b".to_string(), "e".to_string()];
        let g = Group::from_cayley_table(t, Some(labels)).unwrap();
        assert_eq!(g.label(0), "e");
        assert_eq!(g.label(2), "a");
        assert_eq!(g.mul(1, 2), 0); // b * a = e
        assert_eq!(g.mul(2, 2), 1); // a * a = b
    }

    #[test]
    fn duplicate_labels_rejected() {
        let labels = vec!["x".to_string(), "x".to_string()];
        assert!(Group::from_cayley_table(vec![vec![0, 1], vec![1, 0]], Some(labels)).is_err());
    }

    #[test]
    fn cyclic_three() {
        let g = Group::cyclic(3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(g.mul(i, j), (i + j) % 3);
            }
        }
    }

    #[test]
    fn klein_four() {
        let z2 = Group::cyclic(2).unwrap();
        let k = Group::direct_product(&z2, &z2).unwrap();
        assert_eq!(k.order(), 4);
        assert!((0..4).all(|i| k.inv(i) == i));
        assert_eq!(k.label(0), "(0,0)");
    }

    #[test]
    fn symmetric_three_has_three_involutions() {
        let g = Group::symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let orders: Vec<usize> = (0..6).map(|i| g.element_order(i).unwrap()).collect();
        assert_eq!(orders.iter().filter(|&&r| r == 2).count(), 3);
        // Transposition (1 2) in one-line notation is "213".
        assert_eq!(g.element_order(g.find_label("213").unwrap()).unwrap(), 2);
        assert_eq!(g.element_order(g.find_label("231").unwrap()).unwrap(), 3);
    }

    #[test]
    fn symmetric_bound() {
        assert!(matches!(Group::symmetric(7), Err(GroupError::BoundExceeded(_))));
        assert_eq!(Group::symmetric(1).unwrap().order(), 1);
    }

    #[test]
    fn dihedral_relations() {
        let g = Group::dihedral(4).unwrap();
        assert_eq!(g.order(), 8);
        let r = g.find_label("r").unwrap();
        let s = g.find_label("s").unwrap();
        assert_eq!(g.element_order(r).unwrap(), 4);
        assert_eq!(g.element_order(s).unwrap(), 2);
        // s r s = r^-1
        assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
        assert!(Group::dihedral(1).is_err());
    }

    #[test]
    fn cyclic_element_orders() {
        let g = Group::cyclic(6).unwrap();
        assert_eq!(g.element_order(0).unwrap(), 1);
        assert_eq!(g.element_order(2).unwrap(), 3);
        assert_eq!(g.element_order(1).unwrap(), 6);
        assert!(g.element_order(6).is_err());
    }

    #[test]
    fn lagrange_over_builtin_families() {
        let mut groups = Vec::new();
        for n in 1..=24 {
            groups.push(Group::cyclic(n).unwrap());
        }
        for n in 2..=12 {
            groups.push(Group::dihedral(n).unwrap());
        }
        for n in 1..=4 {
            groups.push(Group::symmetric(n).unwrap());
        }
        let z2 = Group::cyclic(2).unwrap();
        groups.push(Group::direct_product(&Group::symmetric(3).unwrap(), &z2).unwrap());
        for g in &groups {
            for i in 0..g.order() {
                assert_eq!(g.order() % g.element_order(i).unwrap(), 0);
            }
        }
    }

    #[test]
    fn product_order() {
        let g = Group::dihedral(3).unwrap();
        let h = Group::cyclic(4).unwrap();
        let p = Group::direct_product(&g, &h).unwrap();
        assert_eq!(p.order(), 24);
        assert!(Group::direct_product(&Group::symmetric(6).unwrap(), &z2()).is_err());
    }

    fn z2() -> Group {
        Group::cyclic(2).unwrap()
    }
}
