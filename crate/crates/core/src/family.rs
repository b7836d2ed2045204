//! Families of finite sets: the graph they induce, intervals, well-gradedness
//! and retraction.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A member of a [`SetFamily`], as indices into its ground set.
pub type Member = BTreeSet<usize>;

/// A ground set of labels and a family of distinct subsets of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Vec<String>,
    members: Vec<Member>,
}

impl SetFamily {
    pub fn new<G, S, M, L>(ground: G, sets: S) -> Result<Self>
    where
        G: IntoIterator,
        G::Item: Into<String>,
        S: IntoIterator<Item = M>,
        M: IntoIterator<Item = L>,
        L: AsRef<str>,
    {
        let ground: Vec<String> = ground.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (i, x) in ground.iter().enumerate() {
            if index.insert(x.as_str(), i).is_some() {
                return Err(Error::DuplicateElement(x.clone()));
            }
        }
        let mut members = Vec::new();
        for set in sets {
            let mut m = Member::new();
            for x in set {
                let x = x.as_ref();
                let i = index
                    .get(x)
                    .ok_or_else(|| Error::UnknownElement(x.to_string()))?;
                m.insert(*i);
            }
            members.push(m);
        }
        Self::from_indexed(ground, members)
    }

    pub fn from_indexed(ground: Vec<String>, members: Vec<Member>) -> Result<Self> {
        let mut seen = HashSet::new();
        for m in &members {
            if let Some(&x) = m.iter().find(|&&x| x >= ground.len()) {
                return Err(Error::UnknownElement(x.to_string()));
            }
            if !seen.insert(m) {
                return Err(Error::DuplicateMember);
            }
        }
        let mut names = HashSet::new();
        if let Some(dup) = ground.iter().find(|x| !names.insert(x.as_str())) {
            return Err(Error::DuplicateElement(dup.clone()));
        }
        Ok(SetFamily { ground, members })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Position of `set` among the members.
    pub fn position(&self, set: &Member) -> Result<usize> {
        self.members
            .iter()
            .position(|m| m == set)
            .ok_or(Error::NotAMember)
    }

    /// Member `i` as ground labels.
    pub fn member_labels(&self, i: usize) -> Vec<&str> {
        self.members[i]
            .iter()
            .map(|&x| self.ground[x].as_str())
            .collect()
    }

    /// Renders member `i` as `{a,b}`.
    pub fn member_name(&self, i: usize) -> String {
        format!("{{{}}}", self.member_labels(i).join(","))
    }

    /// Hamming distance `|P Δ Q|` between members `p` and `q`.
    pub fn distance(&self, p: usize, q: usize) -> usize {
        self.members[p]
            .symmetric_difference(&self.members[q])
            .count()
    }
}

/// Graph on the members, with an edge wherever two members differ in
/// exactly one element. Vertices are labeled by [`SetFamily::member_name`].
pub fn family_graph(fam: &SetFamily) -> Graph {
    let labels = (0..fam.len()).map(|i| fam.member_name(i)).collect();
    let mut edges = Vec::new();
    for p in 0..fam.len() {
        for q in p + 1..fam.len() {
            if fam.distance(p, q) == 1 {
                edges.push((p, q));
            }
        }
    }
    Graph::from_indexed(labels, edges).expect("members are distinct")
}

/// Members `R` with `P ∩ Q ⊆ R ⊆ P ∪ Q`, in member order.
pub fn interval(fam: &SetFamily, p: usize, q: usize) -> Result<Vec<usize>> {
    if p >= fam.len() || q >= fam.len() {
        return Err(Error::NotAMember);
    }
    let (mp, mq) = (&fam.members[p], &fam.members[q]);
    let meet: Member = mp.intersection(mq).copied().collect();
    let join: Member = mp.union(mq).copied().collect();
    let lattice: Vec<usize> = (0..fam.len())
        .filter(|&r| meet.is_subset(&fam.members[r]) && fam.members[r].is_subset(&join))
        .collect();
    debug_assert_eq!(
        lattice,
        (0..fam.len())
            .filter(|&r| fam.distance(p, r) + fam.distance(r, q) == fam.distance(p, q))
            .collect::<Vec<_>>(),
        "lattice and metric betweenness disagree"
    );
    Ok(lattice)
}

/// Checks well-gradedness locally: every pair of members adjacent in the
/// family (their interval holds nothing else) must differ in one element.
/// Returns the first offending pair `(p, q)`, `p < q`, in member order.
pub fn well_graded_violation(fam: &SetFamily) -> Option<(usize, usize)> {
    for p in 0..fam.len() {
        for q in p + 1..fam.len() {
            if fam.distance(p, q) > 1 && interval(fam, p, q).expect("members").len() == 2 {
                return Some((p, q));
            }
        }
    }
    None
}

pub fn is_well_graded(fam: &SetFamily) -> bool {
    well_graded_violation(fam).is_none()
}

/// Restricts every member to `∪F \ ∩F`.
pub fn retraction(fam: &SetFamily) -> Result<SetFamily> {
    let (first, rest) = fam.members.split_first().ok_or(Error::EmptyFamily)?;
    let mut union = first.clone();
    let mut inter = first.clone();
    for m in rest {
        union.extend(m.iter().copied());
        inter.retain(|x| m.contains(x));
    }
    let kept: Vec<usize> = union.difference(&inter).copied().collect();
    let mut remap = vec![usize::MAX; fam.ground.len()];
    for (i, &x) in kept.iter().enumerate() {
        remap[x] = i;
    }
    let ground = kept.iter().map(|&x| fam.ground[x].clone()).collect();
    let members = fam
        .members
        .iter()
        .map(|m| {
            m.iter()
                .filter(|&&x| remap[x] != usize::MAX)
                .map(|&x| remap[x])
                .collect()
        })
        .collect();
    SetFamily::from_indexed(ground, members)
}
