//! Checks shared by the integration tests and the acceptance runner. Each
//! returns `Err` with a description of the first failure.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use garside_core::coxeter::{catalog, Bond, CatalogSpec, CoxeterMatrix, Gen};
use garside_core::low::{GarsideFamily, LowSet, DEFAULT_LOW_CAP};
use garside_core::monoid::{brute, MonoidWord, NormalForm};
use garside_core::roots::{maximal_dihedral_simples_in, positive_roots_to_depth, Root, RootId};
use garside_core::weak::{cone_membership, Element};
use garside_core::CoxeterSystem;

pub type Check = Result<(), String>;

pub const BRUTE_CAP: usize = 1_000_000;

pub fn system(ty: &str, rank: usize) -> CoxeterSystem {
    let matrix = catalog(&CatalogSpec { ty: ty.into(), rank: Some(rank), ..Default::default() }).unwrap();
    CoxeterSystem::new(matrix).unwrap()
}

/// Complete graph with every bond 3.
pub fn all_threes(rank: usize) -> CoxeterSystem {
    let bonds: Vec<_> = (1..=rank).flat_map(|a| (a + 1..=rank).map(move |b| (a, b, Bond::Finite(3)))).collect();
    CoxeterSystem::new(CoxeterMatrix::from_bonds(rank, &bonds).unwrap()).unwrap()
}

/// Three generators, `m12 = 2`, the other two bonds infinite.
pub fn right_angled_example() -> CoxeterSystem {
    let bonds = [(1, 2, Bond::Finite(2)), (1, 3, Bond::Infinite), (2, 3, Bond::Infinite)];
    CoxeterSystem::new(CoxeterMatrix::from_bonds(3, &bonds).unwrap()).unwrap()
}

pub fn low_and_family(w: &CoxeterSystem) -> (LowSet, GarsideFamily) {
    let low = w.enumerate_low(DEFAULT_LOW_CAP).unwrap();
    let fam = w.smallest_family(&low).unwrap();
    (low, fam)
}

fn roots_of(w: &CoxeterSystem, ids: impl IntoIterator<Item = RootId>) -> Vec<Root> {
    ids.into_iter().map(|id| w.registry().root(id)).collect()
}

/// `|N(w)| = l(w)`, and distinct elements have distinct inversion sets.
pub fn inversion_sets(w: &CoxeterSystem, elements: &[Element]) -> Check {
    let mut seen: HashMap<Vec<RootId>, &Element> = HashMap::new();
    for x in elements {
        let mut ids = x.inversion_roots().to_vec();
        ids.sort_unstable();
        ids.dedup();
        if ids.len() != x.len() || x.inversion_bits().len() != x.len() {
            return Err(format!("|N({})| = {} but length {}", w.format_element(x), ids.len(), x.len()));
        }
        // Recompute from scratch: the roots s1...s_{i-1}(alpha_{s_i}).
        for (i, &id) in x.inversion_roots().iter().enumerate() {
            let word = &x.word()[..i];
            let root = w.space().apply_word(word, &w.space().simple(x.word()[i]));
            if root != w.registry().root(id) {
                return Err(format!("inversion {i} of {} disagrees", w.format_element(x)));
            }
        }
        if let Some(other) = seen.insert(ids, x) {
            return Err(format!("{} and {} share N", w.format_element(x), w.format_element(other)));
        }
    }
    Ok(())
}

/// `N^1(w)` equals the set of extreme rays of `cone(N(w))`, decided by exact
/// linear programming.
pub fn n1_extreme_rays(w: &CoxeterSystem, elements: &[Element]) -> Check {
    for x in elements {
        let ids: Vec<RootId> = {
            let mut v = x.inversion_roots().to_vec();
            v.sort_unstable();
            v
        };
        let roots = roots_of(w, ids.iter().copied());
        let extreme: Vec<RootId> = (0..roots.len())
            .filter(|&i| {
                let others: Vec<Root> =
                    roots.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
                !cone_membership(w.space(), &roots[i], &others)
            })
            .map(|i| ids[i])
            .collect();
        if extreme != w.n1_set(x) {
            return Err(format!("N1 of {} is not the extreme-ray set", w.format_element(x)));
        }
    }
    Ok(())
}

/// For every join met during the closure: `N(u) ∪ N(v) ⊆ N(u ∨ v)` and each
/// root of `N(u ∨ v)` lies in `cone(N(u) ∪ N(v))`. Returns the number of
/// joins checked.
pub fn join_cones(w: &CoxeterSystem, low: &LowSet) -> Result<usize, String> {
    let mut failures = Vec::new();
    let mut checked = 0;
    // Distinct (N(u) ∪ N(v), join) pairs need checking once.
    let mut seen: HashSet<(Vec<usize>, Element)> = HashSet::new();
    w.smallest_family_observed(low, |u, v, j| {
        let Some(j) = j else { return };
        checked += 1;
        let union = u.inversion_bits().union(v.inversion_bits());
        if !union.is_subset(j.inversion_bits()) {
            failures.push(format!("{} ∨ {} misses an inversion", w.format_element(u), w.format_element(v)));
            return;
        }
        if !seen.insert((union.iter().collect(), j.clone())) {
            return;
        }
        let gens = roots_of(w, union.iter().map(|i| i as RootId));
        for id in j.inversion_roots().iter().filter(|&&id| !union.contains(id as usize)) {
            if !cone_membership(w.space(), &w.registry().root(*id), &gens) {
                failures.push(format!("{} ∨ {} leaves the cone", w.format_element(u), w.format_element(v)));
                return;
            }
        }
    })
    .map_err(|e| e.to_string())?;
    match failures.first() {
        Some(f) => Err(f.clone()),
        None => Ok(checked),
    }
}

pub fn low_closure(w: &CoxeterSystem, low: &LowSet) -> Check {
    let report = low.check_closure(w);
    if report.passed() {
        Ok(())
    } else {
        Err(format!("{report:?}"))
    }
}

pub fn family_verified(w: &CoxeterSystem, low: &LowSet, fam: &GarsideFamily) -> Check {
    let report = w.verify_family(fam, low).map_err(|e| e.to_string())?;
    if !report.passed() {
        return Err(format!("{report:?}"));
    }
    if let Some(x) = fam.members().iter().find(|x| !low.contains(x)) {
        return Err(format!("{} escapes L", w.format_element(x)));
    }
    Ok(())
}

/// Braid-class index of every word of each length up to `max_len`.
pub struct BruteClasses {
    pub words: Vec<MonoidWord>,
    /// Lexicographically least word of the class.
    pub class: Vec<Vec<Gen>>,
    members: HashMap<Vec<Gen>, BTreeSet<Vec<Gen>>>,
}

impl BruteClasses {
    pub fn new(w: &CoxeterSystem, max_len: usize) -> Self {
        let mut words = Vec::new();
        let mut class = Vec::new();
        let mut members: HashMap<Vec<Gen>, BTreeSet<Vec<Gen>>> = HashMap::new();
        let mut known: HashMap<Vec<Gen>, Vec<Gen>> = HashMap::new();
        for len in 0..=max_len {
            for word in brute::all_words(w, len) {
                let rep = match known.get(word.letters()) {
                    Some(rep) => rep.clone(),
                    None => {
                        let cls = brute::congruence_class(w, &word, BRUTE_CAP).unwrap();
                        let rep = cls.iter().next().unwrap().clone();
                        for x in &cls {
                            known.insert(x.clone(), rep.clone());
                        }
                        members.insert(rep.clone(), cls);
                        rep
                    }
                };
                words.push(word);
                class.push(rep);
            }
        }
        Self { words, class, members }
    }

    pub fn class_of(&self, rep: &[Gen]) -> &BTreeSet<Vec<Gen>> {
        &self.members[rep]
    }

    /// Some word in the class of `g` starts with a word of the class of `f`.
    pub fn divides(&self, w: &CoxeterSystem, f: &[Gen], g_rep: &[Gen]) -> bool {
        let f_class = brute::congruence_class(w, &MonoidWord::new(f.to_vec()), BRUTE_CAP).unwrap();
        self.class_of(g_rep).iter().any(|x| x.len() >= f.len() && f_class.contains(&x[..f.len()]))
    }
}

/// Family normal forms agree with braid classes: two words have the same
/// normal form iff they are congruent. Returns the normal forms computed.
pub fn monoid_eq_vs_brute(
    w: &CoxeterSystem,
    fam: &GarsideFamily,
    classes: &BruteClasses,
) -> Result<Vec<NormalForm>, String> {
    let mut nf_to_class: HashMap<Vec<Vec<Gen>>, &Vec<Gen>> = HashMap::new();
    let mut class_to_nf: HashMap<&Vec<Gen>, Vec<Vec<Gen>>> = HashMap::new();
    let mut forms = Vec::new();
    for (word, rep) in classes.words.iter().zip(&classes.class) {
        let nf = w.f_normal_form(word, fam).map_err(|e| e.to_string())?;
        if nf.lambda() != word.len() {
            return Err(format!("lambda not conserved for {:?}", word.letters()));
        }
        let key: Vec<Vec<Gen>> = nf.entries.iter().map(|e| e.word().to_vec()).collect();
        if let Some(prev) = nf_to_class.insert(key.clone(), rep) {
            if prev != rep {
                return Err(format!("non-congruent words share the normal form {}", w.format_normal_form(&nf)));
            }
        }
        if let Some(prev) = class_to_nf.insert(rep, key.clone()) {
            if prev != key {
                return Err(format!("congruent words {:?} get different normal forms", word.letters()));
            }
        }
        forms.push(nf);
    }
    Ok(forms)
}

/// `left_divides(f, g)` against brute-force divisibility, for every family
/// member `f` and every enumerated word `g`.
pub fn left_divides_vs_brute(w: &CoxeterSystem, fam: &GarsideFamily, classes: &BruteClasses) -> Check {
    let mut seen: HashSet<&Vec<Gen>> = HashSet::new();
    for (word, rep) in classes.words.iter().zip(&classes.class) {
        if !seen.insert(rep) {
            continue;
        }
        for f in fam.members().iter().filter(|f| f.len() <= word.len()) {
            let fast = w.left_divides(f, word);
            let slow = classes.divides(w, f.word(), rep);
            if fast != slow {
                return Err(format!(
                    "left_divides({}, {:?}) = {fast}, brute force says {slow}",
                    w.format_element(f),
                    word.letters()
                ));
            }
        }
    }
    Ok(())
}

/// Every family member dividing the product of an adjacent pair divides its
/// first entry; divisibility by brute force.
pub fn greedy_vs_brute(w: &CoxeterSystem, fam: &GarsideFamily, forms: &[NormalForm]) -> Result<usize, String> {
    let mut pairs: HashSet<(Vec<Gen>, Vec<Gen>)> = HashSet::new();
    for nf in forms {
        if !w.greediness_violations(nf, fam).is_empty() {
            return Err(format!("{} is not greedy", w.format_normal_form(nf)));
        }
        for pair in nf.entries.windows(2) {
            pairs.insert((pair[0].word().to_vec(), pair[1].word().to_vec()));
        }
    }
    for (x, y) in &pairs {
        let product = MonoidWord::new([x.clone(), y.clone()].concat());
        let class = brute::congruence_class(w, &product, BRUTE_CAP).unwrap();
        let xe = w.reduce_word(x);
        for f in fam.members().iter().filter(|f| f.len() <= product.len()) {
            let f_class = brute::congruence_class(w, &MonoidWord::new(f.word().to_vec()), BRUTE_CAP).unwrap();
            let divides = class.iter().any(|c| f_class.contains(&c[..f.len()]));
            if divides && !w.weak_leq(f, &xe) {
                return Err(format!("{} divides {x:?}·{y:?} but not {x:?}", w.format_element(f)));
            }
        }
    }
    Ok(pairs.len())
}

/// The automaton accepts exactly the reduced words, up to `max_len`.
pub fn automaton_language(w: &CoxeterSystem, max_len: usize) -> Result<usize, String> {
    let auto = w.canonical_automaton(garside_core::automaton::DEFAULT_STATE_CAP).map_err(|e| e.to_string())?;
    let mut count = 0;
    for len in 0..=max_len {
        for word in brute::all_words(w, len) {
            let reduced = w.reduce_word(word.letters()).len() == len;
            if auto.accepts(word.letters()) != reduced {
                return Err(format!("automaton and reducedness disagree on {:?}", word.letters()));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Bounded bipodality of the small roots: whenever a small root is not one of
/// the two simple roots of the rank-two subsystem it spans with another
/// root, both of those simple roots are small.
pub fn bipodality(w: &CoxeterSystem, depth_cap: usize) -> Result<usize, String> {
    let space = w.space();
    let universe = positive_roots_to_depth(space, depth_cap);
    let small = w.small_roots();
    let mut planes = 0;
    for sigma in small.roots() {
        for gamma in &universe {
            if gamma == sigma {
                continue;
            }
            let (t1, t2) = maximal_dihedral_simples_in(space, sigma, gamma, &universe).map_err(|e| e.to_string())?;
            planes += 1;
            if *sigma != t1 && *sigma != t2 && (small.position(&t1).is_none() || small.position(&t2).is_none()) {
                return Err(format!("small root {sigma} lies in the plane of {t1} and {t2}, not both small"));
            }
        }
    }
    Ok(planes)
}

/// Prop 5.1 triple equality.
pub fn triple_equality(w: &CoxeterSystem) -> Result<(usize, usize), String> {
    let (low, fam) = low_and_family(w);
    let oracle = w.type_oracle(garside_core::low::DEFAULT_GROUP_CAP).map_err(|e| e.to_string())?;
    if oracle.elements.as_slice() != fam.members() {
        return Err(format!("oracle has {}, family has {}", oracle.elements.len(), fam.len()));
    }
    if low.elements() != fam.members() {
        return Err(format!("L has {}, family has {}", low.len(), fam.len()));
    }
    Ok((fam.len(), fam.extremal().len()))
}
