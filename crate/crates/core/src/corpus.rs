//! Small named matroids used by the examples and test suites: uniform matroids and a
//! handful of explicit basis families with loops, coloops, parallel elements and
//! non-uniform lattices of flats.

use itertools::Itertools;

use crate::matroid::Matroid;

#[derive(Clone, Debug)]
pub struct NamedMatroid {
    pub name: String,
    pub matroid: Matroid,
}

fn named(name: &str, matroid: Matroid) -> NamedMatroid {
    NamedMatroid {
        name: name.to_string(),
        matroid,
    }
}

fn all_but(n: usize, d: usize, excluded: &[&[usize]]) -> Matroid {
    let bases = (1..=n)
        .combinations(d)
        .filter(|b| !excluded.iter().any(|x| x == b))
        .collect();
    Matroid::from_bases(n, bases).expect("corpus family is a matroid")
}

/// Spanning trees of a graph on `vertices` vertices, edges numbered from 1.
fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Matroid {
    let d = vertices - 1;
    let bases = (1..=edges.len())
        .combinations(d)
        .filter(|tree| {
            let mut parent: Vec<usize> = (0..vertices).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                if p[x] != x {
                    p[x] = find(p, p[x]);
                }
                p[x]
            }
            tree.iter().all(|&e| {
                let (a, b) = edges[e - 1];
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
                ra != rb
            })
        })
        .collect();
    Matroid::from_bases(edges.len(), bases).expect("spanning trees form a matroid")
}

/// The cycle matroid of `K_4`, edges `12, 13, 14, 23, 24, 34`.
pub fn k4() -> Matroid {
    graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// The Fano plane with lines `124, 235, 346, 457, 156, 267, 137`.
pub fn fano() -> Matroid {
    all_but(
        7,
        3,
        &[
            &[1, 2, 4],
            &[2, 3, 5],
            &[3, 4, 6],
            &[4, 5, 7],
            &[1, 5, 6],
            &[2, 6, 7],
            &[1, 3, 7],
        ],
    )
}

/// The Vámos matroid: rank 4 on 8 elements, five of the six unions of the pairs
/// `12, 34, 56, 78` are dependent.
pub fn vamos() -> Matroid {
    all_but(
        8,
        4,
        &[
            &[1, 2, 3, 4],
            &[1, 2, 5, 6],
            &[1, 2, 7, 8],
            &[3, 4, 5, 6],
            &[3, 4, 7, 8],
        ],
    )
}

/// Explicit basis families on at most six elements.
pub fn small_explicit() -> Vec<NamedMatroid> {
    let b = |n: usize, bases: &[&[usize]]| {
        Matroid::from_bases(n, bases.iter().map(|s| s.to_vec()).collect())
            .expect("corpus family is a matroid")
    };
    vec![
        named("U(1,2)+U(1,2)", b(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])),
        named("U(2,3)+loop", b(4, &[&[1, 3], &[1, 4], &[3, 4]])),
        named("U(1,2)+coloop", b(3, &[&[1, 3], &[2, 3]])),
        named("parallel pair in rank 2", all_but(4, 2, &[&[1, 2]])),
        named("loop, coloop and parallel pair", b(4, &[&[1, 3], &[2, 3]])),
        named("three-point line in rank 3", all_but(5, 3, &[&[1, 2, 3]])),
        named("U(2,4)+U(1,2)", {
            let bases = (1..=4)
                .combinations(2)
                .cartesian_product([5, 6])
                .map(|(mut s, e)| {
                    s.push(e);
                    s
                })
                .collect();
            Matroid::from_bases(6, bases).expect("direct sum of uniform matroids")
        }),
        named("M(K4)", k4()),
    ]
}

/// Explicit families that are larger or not representable over small fields.
pub fn larger_explicit() -> Vec<NamedMatroid> {
    vec![named("Fano", fano()), named("Vamos", vamos())]
}

/// `U_{d,n}` for `0 ≤ d ≤ max_d`, `d ≤ n ≤ max_n`.
pub fn uniform(max_d: usize, max_n: usize) -> Vec<NamedMatroid> {
    (0..=max_n)
        .flat_map(|n| (0..=max_d.min(n)).map(move |d| (d, n)))
        .map(|(d, n)| {
            named(
                &format!("U({d},{n})"),
                Matroid::uniform(d, n).expect("d <= n"),
            )
        })
        .collect()
}

/// Every corpus matroid with at most `max_bases` bases and rank at most `max_rank`.
pub fn all(max_bases: usize, max_rank: usize) -> Vec<NamedMatroid> {
    let mut out = uniform(max_rank, 8);
    out.extend(small_explicit());
    out.extend(larger_explicit());
    out.retain(|m| {
        m.matroid.rank() <= max_rank
            && m.matroid.basis_count() <= num_bigint::BigInt::from(max_bases)
    });
    out
}
