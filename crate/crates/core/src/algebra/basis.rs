use super::{Element, LocalAlgebra};
use crate::exact::vectors_rank;
use crate::Result;

impl LocalAlgebra {
    /// Basis `1, …` in which every power `mᵏ` is spanned by a tail segment.
    ///
    /// Original basis vectors are kept where possible, so an algebra that is
    /// already adapted comes back unchanged. Returns the new algebra together
    /// with the new basis expressed in the old coordinates.
    pub fn filtration_adapted(&self) -> Result<(LocalAlgebra, Vec<Element>)> {
        let dim = self.dim();
        let powers = self.m_powers();
        let mut chosen: Vec<(usize, Element, String)> = Vec::new();
        for (k, pk) in powers.iter().enumerate().rev() {
            let depth = k + 1;
            let mut span: Vec<Element> = chosen.iter().map(|(_, v, _)| v.clone()).collect();
            let candidates = (1..dim)
                .map(|i| (self.basis_element(i), self.labels()[i].clone()))
                .chain(pk.iter().map(|v| (v.clone(), self.format_element(v))));
            for (v, label) in candidates {
                if span.len() == pk.len() {
                    break;
                }
                let mut in_pk = pk.clone();
                in_pk.push(v.clone());
                if vectors_rank(&in_pk) != pk.len() {
                    continue;
                }
                let mut trial = span.clone();
                trial.push(v.clone());
                if vectors_rank(&trial) > span.len() {
                    span = trial;
                    chosen.push((depth, v, label));
                }
            }
        }
        chosen.sort_by_key(|(d, _, _)| *d);
        let mut basis = vec![self.unity()];
        let mut labels = vec![self.labels()[0].clone()];
        for (_, v, l) in chosen {
            basis.push(v);
            labels.push(l);
        }
        if (0..dim).all(|i| basis[i] == self.basis_element(i)) {
            return Ok((self.clone(), basis));
        }
        let adapted = self.change_basis(&basis, labels)?;
        Ok((adapted, basis))
    }

    /// True if each power of `m` is spanned by a tail of the basis.
    pub fn is_filtration_adapted(&self) -> bool {
        let dim = self.dim();
        let powers = self.m_powers();
        powers.iter().all(|pk| {
            let start = dim - pk.len();
            let mut all = pk.clone();
            all.extend((start..dim).map(|i| self.basis_element(i)));
            vectors_rank(&all) == pk.len()
        })
    }
}
