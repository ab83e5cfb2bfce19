//! Subgroup-level structure read off a fully enumerated group: conjugacy
//! classes, Sylow subgroups, normalizers, and the derived series.
//!
//! Everything works on element indices into one parent [`ElementTable`];
//! a [`Subgroup`] is just a sorted index set. Scans run in table order, so
//! for a fixed table every result here is deterministic.

use crate::arith;
use crate::perm::{self, ElementTable};
use crate::{Error, Result};

/// Conjugacy classes of a table, ordered by least member index. Class 0 is
/// always the identity's class, and each class lists its members sorted
/// ascending, so the representative (least member) is `class(i)[0]`.
pub struct ConjugacyClasses {
    classes: Vec<Vec<u32>>,
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    /// Orbits of the conjugation action, each grown from its least
    /// unassigned element by conjugating with a generating set.
    pub fn compute(table: &ElementTable) -> ConjugacyClasses {
        let gens = generating_indices(table);
        let n = table.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes: Vec<Vec<u32>> = Vec::new();
        let mut queue: Vec<u32> = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            class_of[start] = cid;
            queue.clear();
            queue.push(start as u32);
            let mut members = vec![start as u32];
            let mut head = 0;
            while head < queue.len() {
                let e = queue[head] as usize;
                head += 1;
                for &g in &gens {
                    let c = table.element(e).conjugate_by(table.element(g));
                    let ci = table.index_of(&c).expect("conjugate stays in the group");
                    if class_of[ci] == u32::MAX {
                        class_of[ci] = cid;
                        queue.push(ci as u32);
                        members.push(ci as u32);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, i: usize) -> &[u32] {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    /// Least element index in class `i`.
    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0] as usize
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    /// Index of the class holding the inverses of class `i`.
    pub fn inverse_class(&self, table: &ElementTable, i: usize) -> usize {
        self.class_of(table.inverse_of(self.representative(i)))
    }
}

/// A subgroup of a parent table, as a sorted list of element indices.
/// Index 0 (the identity) is always a member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<u32>,
}

impl Subgroup {
    pub fn trivial() -> Subgroup {
        Subgroup { members: vec![0] }
    }

    /// Closure of the given element indices inside the parent group.
    pub fn generated(table: &ElementTable, generators: &[usize]) -> Subgroup {
        Subgroup {
            members: close_indices(table, generators),
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.binary_search(&(element as u32)).is_ok()
    }

    pub fn is_whole_group(&self, table: &ElementTable) -> bool {
        self.members.len() == table.len()
    }

    /// Materializes the subgroup as a standalone table so it can be fed
    /// back through any whole-group computation.
    pub fn to_table(&self, parent: &ElementTable) -> ElementTable {
        let elements = self
            .members
            .iter()
            .map(|&i| parent.element(i as usize).clone())
            .collect();
        perm::table_from_closed_elements(elements)
    }
}

/// A small generating sequence: scan elements in table order, keeping each
/// one that is not yet in the closure of those kept so far. At most
/// log2 |G| elements survive.
pub fn generating_indices(table: &ElementTable) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut closure = vec![0u32];
    for e in 1..table.len() {
        if closure.len() == table.len() {
            break;
        }
        if closure.binary_search(&(e as u32)).is_ok() {
            continue;
        }
        gens.push(e);
        closure = close_indices(table, &gens);
    }
    gens
}

/// Sorted closure of the subgroup generated by `gens`, by right
/// multiplication from the identity.
fn close_indices(table: &ElementTable, gens: &[usize]) -> Vec<u32> {
    let mut in_set = vec![false; table.len()];
    in_set[0] = true;
    let mut members = vec![0u32];
    let mut head = 0;
    while head < members.len() {
        let e = members[head] as usize;
        head += 1;
        for &g in gens {
            let w = table.compose_idx(e, g);
            if !in_set[w] {
                in_set[w] = true;
                members.push(w as u32);
            }
        }
    }
    members.sort_unstable();
    members
}

/// A Sylow `p`-subgroup, grown by the normalizer climb: starting from the
/// trivial subgroup, repeatedly adjoin the first `p`-power-order element of
/// the current normalizer that lies outside the subgroup. Each extension is
/// again a `p`-group because the new element normalizes the old subgroup,
/// so the climb reaches full Sylow order.
pub fn sylow_subgroup(table: &ElementTable, p: u64) -> Result<Subgroup> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut target = 1u64;
    let mut rest = table.len() as u64;
    while rest % p == 0 {
        rest /= p;
        target *= p;
    }
    let mut members = vec![0u32];
    let mut in_sub = vec![false; table.len()];
    in_sub[0] = true;
    let mut sub_gens: Vec<usize> = Vec::new();
    while (members.len() as u64) < target {
        let x = (0..table.len())
            .find(|&g| {
                if in_sub[g] {
                    return false;
                }
                let ord = table.element(g).order();
                if !is_power_of(ord, p) {
                    return false;
                }
                normalizes(table, g, &sub_gens, &in_sub)
            })
            .expect("a p-subgroup below Sylow order has p-power elements in its normalizer");
        sub_gens.push(x);
        members = close_indices(table, &sub_gens);
        in_sub.iter_mut().for_each(|b| *b = false);
        for &m in &members {
            in_sub[m as usize] = true;
        }
    }
    Ok(Subgroup { members })
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Whether element `g` conjugates the subgroup into itself. Checking the
/// subgroup's generators suffices, and inclusion implies equality by
/// finiteness.
fn normalizes(table: &ElementTable, g: usize, sub_gens: &[usize], in_sub: &[bool]) -> bool {
    sub_gens.iter().all(|&s| {
        let c = table.element(s).conjugate_by(table.element(g));
        table.index_of(&c).map(|i| in_sub[i]).unwrap_or(false)
    })
}

/// The normalizer of a subgroup: all elements whose conjugation maps the
/// subgroup onto itself.
pub fn normalizer(table: &ElementTable, sub: &Subgroup) -> Subgroup {
    let mut in_sub = vec![false; table.len()];
    for &m in sub.members() {
        in_sub[m as usize] = true;
    }
    let sub_table = sub.to_table(table);
    let sub_gens: Vec<usize> = generating_indices(&sub_table)
        .into_iter()
        .map(|i| {
            table
                .index_of(sub_table.element(i))
                .expect("subgroup element is in the parent")
        })
        .collect();
    let members = (0..table.len())
        .filter(|&g| normalizes(table, g, &sub_gens, &in_sub))
        .map(|g| g as u32)
        .collect();
    Subgroup { members }
}

/// Derived subgroup of the subgroup spanned by `members`: the normal
/// closure, within that subgroup, of the commutators of its generators.
fn derived_subgroup(table: &ElementTable, members: &[u32]) -> Vec<u32> {
    let sub_gens = if members.len() == table.len() {
        generating_indices(table)
    } else {
        let sub_table = Subgroup {
            members: members.to_vec(),
        }
        .to_table(table);
        generating_indices(&sub_table)
            .into_iter()
            .map(|i| table.index_of(sub_table.element(i)).unwrap())
            .collect()
    };
    // Commutators [a,b] = a^-1 b^-1 a b of generator pairs.
    let mut seed: Vec<usize> = Vec::new();
    for &a in &sub_gens {
        for &b in &sub_gens {
            let t = table.compose_idx(table.inverse_of(a), table.inverse_of(b));
            let t = table.compose_idx(t, a);
            let c = table.compose_idx(t, b);
            if c != 0 && !seed.contains(&c) {
                seed.push(c);
            }
        }
    }
    // Close under multiplication, then keep conjugating by the subgroup's
    // generators until stable; conjugation-stability under generators gives
    // normality in the subgroup.
    let mut gens = seed;
    let mut closure = close_indices(table, &gens);
    loop {
        let mut missing = None;
        'scan: for &u in &closure {
            for &g in &sub_gens {
                let c = table.element(u as usize).conjugate_by(table.element(g));
                let ci = table.index_of(&c).unwrap();
                if closure.binary_search(&(ci as u32)).is_err() {
                    missing = Some(ci);
                    break 'scan;
                }
            }
        }
        match missing {
            Some(ci) => {
                gens.push(ci);
                closure = close_indices(table, &gens);
            }
            None => return closure,
        }
    }
}

/// The derived series `G' >= G'' >= ...`, stopping at the first repeat.
pub fn derived_series(table: &ElementTable) -> Vec<Subgroup> {
    let mut series = Vec::new();
    let mut current: Vec<u32> = (0..table.len() as u32).collect();
    loop {
        let next = derived_subgroup(table, &current);
        if next.len() == current.len() && !series.is_empty() {
            return series;
        }
        let stable = next.len() == 1 || next.len() == current.len();
        current = next.clone();
        series.push(Subgroup { members: next });
        if stable {
            return series;
        }
    }
}

/// A group is solvable exactly when its derived series hits the trivial
/// subgroup.
pub fn derived_series_solvable(table: &ElementTable) -> bool {
    series_reaches_trivial(&derived_series(table))
}

fn series_reaches_trivial(series: &[Subgroup]) -> bool {
    series.last().map(|s| s.order() == 1).unwrap_or(true)
}

/// Number of degree-1 complex characters: the index of the derived
/// subgroup.
pub fn linear_character_count(table: &ElementTable) -> u64 {
    let derived = derived_subgroup(table, &(0..table.len() as u32).collect::<Vec<_>>());
    (table.len() / derived.len()) as u64
}
