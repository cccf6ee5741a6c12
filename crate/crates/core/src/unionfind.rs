/// Disjoint sets over `0..len` whose representative is always the minimal member.
#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        DisjointSets { parent: (0..len).collect() }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = i;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Merges the sets of `i` and `j`. Returns true if they were distinct.
    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let a = self.find(i);
        let b = self.find(j);
        if a == b {
            return false;
        }
        // The smaller index becomes the root, keeping representatives minimal.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi] = lo;
        true
    }

    /// Class index for every element, classes numbered by increasing representative.
    pub fn classes(&mut self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut class_of_root = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let r = self.find(i);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = next;
                next += 1;
            }
            out.push(class_of_root[r]);
        }
        (out, next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn representative_is_minimal() {
        let mut ds = DisjointSets::new(6);
        assert!(ds.union(5, 3));
        assert!(ds.union(3, 4));
        assert!(!ds.union(4, 5));
        assert_eq!(ds.find(5), 3);
        assert!(ds.union(4, 1));
        assert_eq!(ds.find(5), 1);
        let (classes, count) = ds.classes();
        assert_eq!(count, 3);
        assert_eq!(classes, vec![0, 1, 2, 1, 1, 1]);
    }
}
