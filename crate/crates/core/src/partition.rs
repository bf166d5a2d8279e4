//! Set partitions of a finite support `{0, .., n-1}` and their lattice operations.
//!
//! A partition stands for the finite sub-algebra it generates: statistics
//! measurable with respect to it are exactly those constant on its blocks.
//! "Coarser" partitions generate smaller algebras.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::model::Statistic;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn into_partition(mut self) -> Partition {
        let n = self.parent.len();
        let labels: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        Partition::from_labels(&labels)
    }
}

/// Blocks sorted by smallest member, members ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Checks that `blocks` are non-empty, disjoint and cover `0..n`, then
    /// canonicalizes.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &k in b {
                if k >= n {
                    return Err(Error::InvalidPartition(format!(
                        "element {k} outside 0..{n}"
                    )));
                }
                if std::mem::replace(&mut seen[k], true) {
                    return Err(Error::InvalidPartition(format!("element {k} repeated")));
                }
            }
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("element {k} not covered")));
        }
        Ok(Self::canonical(n, blocks))
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { n, blocks }
    }

    /// Groups elements by equal label.
    pub fn from_labels<L: Ord + Clone>(labels: &[L]) -> Self {
        let mut groups: BTreeMap<L, Vec<usize>> = BTreeMap::new();
        for (k, l) in labels.iter().enumerate() {
            groups.entry(l.clone()).or_default().push(k);
        }
        Self::canonical(labels.len(), groups.into_values().collect())
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(|k| vec![k]).collect(),
        }
    }

    pub fn whole(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 {
                vec![]
            } else {
                vec![(0..n).collect()]
            },
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `labels[k]` = index of the block containing `k`.
    pub fn block_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &k in b {
                labels[k] = j;
            }
        }
        labels
    }

    pub fn is_singletons(&self) -> bool {
        self.blocks.len() == self.n
    }

    /// True iff `g` is constant on every block.
    pub fn is_measurable(&self, g: &Statistic) -> bool {
        g.len() == self.n
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&k| g.values()[k] == g.values()[b[0]]))
    }

    /// Statistic taking `values[j]` on block `j`.
    pub fn lift(&self, values: &[crate::rational::Rational]) -> Statistic {
        assert_eq!(values.len(), self.blocks.len());
        let labels = self.block_labels();
        Statistic::new(labels.iter().map(|&j| values[j].clone()).collect())
    }

    /// Renders blocks 1-based, e.g. `{{1,2,3},{4}}`.
    pub fn one_based(&self) -> String {
        self.render(|k| (k + 1).to_string())
    }

    pub fn render<F: Fn(usize) -> String>(&self, name: F) -> String {
        let inner: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                format!(
                    "{{{}}}",
                    b.iter().map(|&k| name(k)).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        format!("{{{}}}", inner.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_based())
    }
}

fn same_ground(p: &Partition, q: &Partition) -> Result<()> {
    if p.n != q.n {
        return Err(Error::GroundSetMismatch {
            left: p.n,
            right: q.n,
        });
    }
    Ok(())
}

/// True iff every block of `p` lies inside a block of `q` (`p` is finer).
pub fn refines(p: &Partition, q: &Partition) -> Result<bool> {
    same_ground(p, q)?;
    let lq = q.block_labels();
    Ok(p.blocks
        .iter()
        .all(|b| b.iter().all(|&k| lq[k] == lq[b[0]])))
}

/// Meet in the refinement order: blocks are the non-empty intersections of a
/// `p`-block with a `q`-block. Its algebra is the one generated by both.
pub fn common_refinement(p: &Partition, q: &Partition) -> Result<Partition> {
    same_ground(p, q)?;
    let (lp, lq) = (p.block_labels(), q.block_labels());
    let pairs: Vec<(usize, usize)> = lp.into_iter().zip(lq).collect();
    Ok(Partition::from_labels(&pairs))
}

/// Join in the refinement order: transitive closure of "together in some input".
pub fn common_coarsening(ps: &[Partition]) -> Result<Partition> {
    let Some(first) = ps.first() else {
        return Err(Error::InvalidPartition("no partitions to coarsen".into()));
    };
    let mut uf = UnionFind::new(first.n);
    for p in ps {
        same_ground(first, p)?;
        for b in &p.blocks {
            for &k in &b[1..] {
                uf.union(b[0], k);
            }
        }
    }
    Ok(uf.into_partition())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Builds from 1-based blocks.
    fn p1(n: usize, blocks: &[&[usize]]) -> Partition {
        Partition::new(
            n,
            blocks
                .iter()
                .map(|b| b.iter().map(|k| k - 1).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn canonicalization_is_order_insensitive() {
        let a = p1(4, &[&[4, 3], &[2, 1]]);
        let b = p1(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(a, b);
        assert_eq!(a.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(Partition::new(4, a.blocks().to_vec()).unwrap(), a);
    }

    #[test]
    fn invalid_partitions() {
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(2, vec![vec![0, 1], vec![1]]).is_err());
        assert!(Partition::new(2, vec![vec![0, 1], vec![]]).is_err());
        assert!(Partition::new(2, vec![vec![0, 2]]).is_err());
    }

    #[test]
    fn refines_examples() {
        let s = Partition::singletons(3);
        assert!(refines(&s, &p1(3, &[&[1, 3], &[2]])).unwrap());
        assert!(refines(&p1(3, &[&[1, 2], &[3]]), &p1(3, &[&[1, 2, 3]])).unwrap());
        assert!(!refines(&p1(3, &[&[1, 3], &[2]]), &p1(3, &[&[1, 2], &[3]])).unwrap());
        assert!(matches!(
            refines(&s, &Partition::singletons(4)),
            Err(Error::GroundSetMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn common_refinement_examples() {
        let p = p1(4, &[&[1, 2], &[3, 4]]);
        let q = p1(4, &[&[1, 3], &[2, 4]]);
        assert_eq!(common_refinement(&p, &q).unwrap(), Partition::singletons(4));
        assert_eq!(common_refinement(&p, &p).unwrap(), p);
        let p = p1(4, &[&[1, 2, 3], &[4]]);
        let q = p1(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(
            common_refinement(&p, &q).unwrap(),
            p1(4, &[&[1, 2], &[3], &[4]])
        );
    }

    #[test]
    fn common_coarsening_examples() {
        let a = p1(3, &[&[1, 2], &[3]]);
        let b = p1(3, &[&[2, 3], &[1]]);
        assert_eq!(
            common_coarsening(&[a.clone(), b]).unwrap(),
            Partition::whole(3)
        );
        assert_eq!(common_coarsening(std::slice::from_ref(&a)).unwrap(), a);
        let s = Partition::singletons(3);
        assert_eq!(common_coarsening(&[s.clone(), s.clone()]).unwrap(), s);
        assert!(common_coarsening(&[]).is_err());
    }

    #[test]
    fn measurability() {
        use crate::rational::int;
        let p = p1(3, &[&[1, 3], &[2]]);
        assert!(p.is_measurable(&Statistic::new(vec![int(5), int(1), int(5)])));
        assert!(!p.is_measurable(&Statistic::new(vec![int(5), int(1), int(4)])));
        assert_eq!(
            p.lift(&[int(7), int(9)]).values(),
            &[int(7), int(9), int(7)]
        );
        assert_eq!(p.to_string(), "{{1,3},{2}}");
    }

    fn partition(n: usize) -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0usize..n, n).prop_map(|l| Partition::from_labels(&l))
    }

    proptest! {
        #[test]
        fn lattice_laws(
            (p, q, r) in (1usize..8).prop_flat_map(|n| (partition(n), partition(n), partition(n)))
        ) {
            let meet = common_refinement(&p, &q).unwrap();
            let join = common_coarsening(&[p.clone(), q.clone()]).unwrap();
            prop_assert!(refines(&meet, &p).unwrap());
            prop_assert!(refines(&meet, &q).unwrap());
            prop_assert!(refines(&p, &join).unwrap());
            prop_assert!(refines(&q, &join).unwrap());
            // universality
            if refines(&r, &p).unwrap() && refines(&r, &q).unwrap() {
                prop_assert!(refines(&r, &meet).unwrap());
            }
            if refines(&p, &r).unwrap() && refines(&q, &r).unwrap() {
                prop_assert!(refines(&join, &r).unwrap());
            }
            prop_assert_eq!(Partition::from_labels(&p.block_labels()), p.clone());
        }
    }
}
