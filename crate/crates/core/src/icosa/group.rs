use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::exactfield::Field;

use super::MoebiusMap;

/// A finite subgroup of PGL2 given by its elements in canonical form.
#[derive(Debug, Clone)]
pub struct MoebiusGroup<F> {
    elements: Vec<MoebiusMap<F>>,
}

impl<F: Field> MoebiusGroup<F> {
    /// Closure of the generators under composition. `limit` guards against
    /// generators of an infinite group.
    pub fn generate(gens: &[MoebiusMap<F>], limit: usize) -> Option<Self> {
        let mut elements = vec![MoebiusMap::identity()];
        let mut frontier = elements.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for g in gens {
                    let y = x.compose(g);
                    if !elements.contains(&y) {
                        elements.push(y.clone());
                        next.push(y);
                        if elements.len() > limit {
                            return None;
                        }
                    }
                }
            }
            frontier = next;
        }
        Some(MoebiusGroup { elements })
    }

    /// Wraps an explicit element list, checking closure.
    pub fn from_elements(elements: Vec<MoebiusMap<F>>) -> Option<Self> {
        let g = MoebiusGroup { elements };
        if g.is_closed() {
            Some(g)
        } else {
            None
        }
    }

    pub fn elements(&self) -> &[MoebiusMap<F>] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, g: &MoebiusMap<F>) -> Option<usize> {
        self.elements.iter().position(|x| x == g)
    }

    pub fn contains(&self, g: &MoebiusMap<F>) -> bool {
        self.index_of(g).is_some()
    }

    /// Closed under products and inverses, and contains the identity.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().any(|g| g.is_identity())
            && self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|h| self.contains(&g.compose(h))))
    }

    /// Cayley table as element indices.
    pub fn multiplication_table(&self) -> Vec<Vec<usize>> {
        self.elements
            .iter()
            .map(|g| {
                self.elements
                    .iter()
                    .map(|h| self.index_of(&g.compose(h)).expect("closed"))
                    .collect()
            })
            .collect()
    }

    /// Histogram of element orders.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for g in &self.elements {
            let o = g.order(self.elements.len()).expect("finite group");
            *out.entry(o).or_insert(0) += 1;
        }
        out
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generating_set(&self) -> Vec<MoebiusMap<F>> {
        let mut gens: Vec<MoebiusMap<F>> = Vec::new();
        let mut span = vec![MoebiusMap::identity()];
        for g in &self.elements {
            if span.contains(g) {
                continue;
            }
            gens.push(g.clone());
            span = Self::generate(&gens, self.elements.len())
                .expect("subgroup of a finite group")
                .elements;
            if span.len() == self.elements.len() {
                break;
            }
        }
        gens
    }

    /// The conjugate group s G s⁻¹.
    pub fn conjugate(&self, s: &MoebiusMap<F>) -> Self {
        let si = s.inverse();
        MoebiusGroup {
            elements: self
                .elements
                .iter()
                .map(|g| s.compose(g).compose(&si))
                .collect(),
        }
    }
}

/// True when every row and column of the table is a permutation.
pub fn is_latin_square(table: &[Vec<usize>]) -> bool {
    let n = table.len();
    let perm = |it: &mut dyn Iterator<Item = usize>| {
        let mut seen = vec![false; n];
        for v in it {
            if v >= n || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    };
    (0..n).all(|i| perm(&mut table[i].iter().copied()) && perm(&mut (0..n).map(|j| table[j][i])))
}
