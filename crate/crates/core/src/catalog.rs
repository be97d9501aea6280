//! Built-in diagrams and cut presentations used by the CLI and the test
//! suites.
//!
//! Conventions for the planar codes below: crossing slots are listed
//! counterclockwise from the incoming under-strand; all-positive diagrams
//! have their incoming over-strand in slot 3.

use std::collections::BTreeMap;

use crate::diagram::{
    BoundaryRecord, Crossing, CutPresentation, EdgeId, EdgeRec, Endpoint, OrientedDiagram,
};

fn e(id: u32) -> EdgeId {
    EdgeId(id)
}

fn xing(a: u32, b: u32, c: u32, d: u32) -> Crossing {
    Crossing {
        slots: [e(a), e(b), e(c), e(d)],
    }
}

fn cr(crossing: usize, slot: u8) -> Endpoint {
    Endpoint::Crossing { crossing, slot }
}

fn bd(pos: usize) -> Endpoint {
    Endpoint::Boundary { pos }
}

fn edges(list: Vec<(u32, Endpoint, Endpoint)>) -> BTreeMap<EdgeId, EdgeRec> {
    list.into_iter()
        .map(|(id, tail, head)| (e(id), EdgeRec { tail, head }))
        .collect()
}

/// Crossingless unknot: one free loop.
pub fn unknot() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![],
        edges: BTreeMap::new(),
        free_loops: 1,
    }
}

/// Unknot with one positive curl.
pub fn unknot_kink() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(1, 1, 2, 2)],
        edges: edges(vec![(1, cr(0, 1), cr(0, 0)), (2, cr(0, 2), cr(0, 3))]),
        free_loops: 0,
    }
}

/// Hopf link with two positive crossings.
pub fn hopf() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(4, 2, 3, 1), xing(2, 4, 1, 3)],
        edges: edges(vec![
            (1, cr(1, 2), cr(0, 3)),
            (2, cr(0, 1), cr(1, 0)),
            (3, cr(0, 2), cr(1, 3)),
            (4, cr(1, 1), cr(0, 0)),
        ]),
        free_loops: 0,
    }
}

/// Hopf with the two crossings listed in the opposite order; the same link,
/// used to check that the crossing order does not affect homology.
pub fn hopf_reordered() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(2, 4, 1, 3), xing(4, 2, 3, 1)],
        edges: edges(vec![
            (1, cr(0, 2), cr(1, 3)),
            (2, cr(1, 1), cr(0, 0)),
            (3, cr(1, 2), cr(0, 3)),
            (4, cr(0, 1), cr(1, 0)),
        ]),
        free_loops: 0,
    }
}

/// Right-handed trefoil: braid closure with three positive crossings.
pub fn trefoil() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(1, 2, 3, 4), xing(2, 5, 6, 3), xing(5, 1, 4, 6)],
        edges: edges(vec![
            (1, cr(2, 1), cr(0, 0)),
            (2, cr(0, 1), cr(1, 0)),
            (3, cr(0, 2), cr(1, 3)),
            (4, cr(2, 2), cr(0, 3)),
            (5, cr(1, 1), cr(2, 0)),
            (6, cr(1, 2), cr(2, 3)),
        ]),
        free_loops: 0,
    }
}

pub fn mirror_trefoil() -> OrientedDiagram {
    trefoil().mirror()
}

pub fn mirror_hopf() -> OrientedDiagram {
    hopf().mirror()
}

/// Figure-eight knot as the closure of a three-strand braid with two
/// positive and two negative crossings.
pub fn figure_eight() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![
            xing(2, 1, 3, 6),
            xing(8, 3, 4, 7),
            xing(1, 2, 5, 4),
            xing(7, 5, 6, 8),
        ],
        edges: edges(vec![
            (1, cr(0, 1), cr(2, 0)),
            (2, cr(2, 1), cr(0, 0)),
            (3, cr(0, 2), cr(1, 1)),
            (4, cr(1, 2), cr(2, 3)),
            (5, cr(2, 2), cr(3, 1)),
            (6, cr(3, 2), cr(0, 3)),
            (7, cr(1, 3), cr(3, 0)),
            (8, cr(3, 3), cr(1, 0)),
        ]),
        free_loops: 0,
    }
}

/// Cut one edge of a closed diagram open, producing a two-endpoint tangle.
/// The strand leaves the tangle at `exit_pos` and re-enters at `enter_pos`.
/// The outgoing half takes a fresh id; the crossing slot at the old tail is
/// rewritten to name it.
fn open_edge(
    d: &OrientedDiagram,
    edge: EdgeId,
    enter_pos: usize,
    exit_pos: usize,
) -> OrientedDiagram {
    let mut out = d.clone();
    let rec = out.edges.remove(&edge).expect("edge exists");
    let fresh = EdgeId(d.edges.keys().map(|e| e.0).max().unwrap_or(0) + 1);
    out.edges.insert(
        fresh,
        EdgeRec {
            tail: rec.tail,
            head: bd(exit_pos),
        },
    );
    out.edges.insert(
        edge,
        EdgeRec {
            tail: bd(enter_pos),
            head: rec.head,
        },
    );
    if let Endpoint::Crossing { crossing, slot } = rec.tail {
        out.crossings[crossing].slots[slot as usize] = fresh;
    }
    out
}

/// Connected sum of the left-handed and right-handed trefoils (the square
/// knot), cut at the two-point neck. Side 1 carries three negative
/// crossings, which exercises the odd-shift paths of the double complex.
pub fn square_knot_cut() -> CutPresentation {
    let tangle1 = open_edge(&mirror_trefoil(), e(1), 1, 2);
    let tangle2 = open_edge(&trefoil(), e(1), 2, 1);
    CutPresentation {
        n: 1,
        tangle1,
        tangle2,
        boundary: vec![
            BoundaryRecord {
                pos: 1,
                into_tangle1: true,
                tangle1_edge: e(1),
                tangle2_edge: e(7),
            },
            BoundaryRecord {
                pos: 2,
                into_tangle1: false,
                tangle1_edge: e(7),
                tangle2_edge: e(1),
            },
        ],
    }
}

/// The two-crossing clasp tangle that makes up half of the four-point cuts:
/// strands a1 -> b2 and a2 -> b1, clasping twice, both crossings positive.
/// Used as tangle 1 of the four-crossing cut and (re-labeled) as tangle 2.
fn clasp_tangle_side1() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(5, 2, 6, 1), xing(2, 5, 3, 4)],
        edges: edges(vec![
            (1, bd(1), cr(0, 3)),
            (2, cr(0, 1), cr(1, 0)),
            (3, cr(1, 2), bd(4)),
            (4, bd(3), cr(1, 3)),
            (5, cr(1, 1), cr(0, 0)),
            (6, cr(0, 2), bd(2)),
        ]),
        free_loops: 0,
    }
}

/// Same clasp on the other side of the cut: enters at b-points, exits at
/// a-points.
fn clasp_tangle_side2() -> OrientedDiagram {
    OrientedDiagram {
        crossings: vec![xing(5, 2, 6, 1), xing(2, 5, 3, 4)],
        edges: edges(vec![
            (1, bd(4), cr(0, 3)),
            (2, cr(0, 1), cr(1, 0)),
            (3, cr(1, 2), bd(1)),
            (4, bd(2), cr(1, 3)),
            (5, cr(1, 1), cr(0, 0)),
            (6, cr(0, 2), bd(3)),
        ]),
        free_loops: 0,
    }
}

/// Four-crossing, two-component diagram (each component winding twice around
/// the other) with the alternating four-point cut through its middle.
pub fn solomon_cut() -> CutPresentation {
    CutPresentation {
        n: 2,
        tangle1: clasp_tangle_side1(),
        tangle2: clasp_tangle_side2(),
        boundary: vec![
            BoundaryRecord {
                pos: 1,
                into_tangle1: true,
                tangle1_edge: e(1),
                tangle2_edge: e(3),
            },
            BoundaryRecord {
                pos: 2,
                into_tangle1: false,
                tangle1_edge: e(6),
                tangle2_edge: e(4),
            },
            BoundaryRecord {
                pos: 3,
                into_tangle1: true,
                tangle1_edge: e(4),
                tangle2_edge: e(6),
            },
            BoundaryRecord {
                pos: 4,
                into_tangle1: false,
                tangle1_edge: e(3),
                tangle2_edge: e(1),
            },
        ],
    }
}

/// The glued four-crossing diagram of `solomon_cut`.
pub fn solomon() -> OrientedDiagram {
    crate::surgery::glue(&solomon_cut())
        .expect("catalog cut is valid")
        .diagram
}

pub fn mirror_solomon() -> OrientedDiagram {
    solomon().mirror()
}

/// Two-crossing diagram obtained by replacing tangle 1 of the four-point cut
/// with plain arcs (a1 -> b2 and a2 -> b1); the cut stays in place.
pub fn half_solomon() -> CutPresentation {
    let tangle1 = OrientedDiagram {
        crossings: vec![],
        edges: edges(vec![(1, bd(1), bd(4)), (2, bd(3), bd(2))]),
        free_loops: 0,
    };
    CutPresentation {
        n: 2,
        tangle1,
        tangle2: clasp_tangle_side2(),
        boundary: vec![
            BoundaryRecord {
                pos: 1,
                into_tangle1: true,
                tangle1_edge: e(1),
                tangle2_edge: e(3),
            },
            BoundaryRecord {
                pos: 2,
                into_tangle1: false,
                tangle1_edge: e(2),
                tangle2_edge: e(4),
            },
            BoundaryRecord {
                pos: 3,
                into_tangle1: true,
                tangle1_edge: e(2),
                tangle2_edge: e(6),
            },
            BoundaryRecord {
                pos: 4,
                into_tangle1: false,
                tangle1_edge: e(1),
                tangle2_edge: e(1),
            },
        ],
    }
}

/// Connected sum of two positive Hopf links, cut at the two-point neck.
pub fn hopf_connected_sum() -> CutPresentation {
    // tangle 1: a Hopf diagram with one strand opened (enters at position 1,
    // leaves at position 2)
    let tangle1 = OrientedDiagram {
        crossings: vec![xing(3, 4, 2, 1), xing(5, 3, 1, 2)],
        edges: edges(vec![
            (1, cr(1, 2), cr(0, 3)),
            (2, cr(0, 2), cr(1, 3)),
            (3, cr(1, 1), cr(0, 0)),
            (4, cr(0, 1), bd(2)),
            (5, bd(1), cr(1, 0)),
        ]),
        free_loops: 0,
    };
    // tangle 2: the same opened Hopf, entering at position 2, leaving at 1
    let tangle2 = OrientedDiagram {
        crossings: vec![xing(3, 4, 2, 1), xing(5, 3, 1, 2)],
        edges: edges(vec![
            (1, cr(1, 2), cr(0, 3)),
            (2, cr(0, 2), cr(1, 3)),
            (3, cr(1, 1), cr(0, 0)),
            (4, cr(0, 1), bd(1)),
            (5, bd(2), cr(1, 0)),
        ]),
        free_loops: 0,
    };
    CutPresentation {
        n: 1,
        tangle1,
        tangle2,
        boundary: vec![
            BoundaryRecord {
                pos: 1,
                into_tangle1: true,
                tangle1_edge: e(5),
                tangle2_edge: e(4),
            },
            BoundaryRecord {
                pos: 2,
                into_tangle1: false,
                tangle1_edge: e(4),
                tangle2_edge: e(5),
            },
        ],
    }
}

/// Disjoint union of an unknot and the Hopf link, presented as a cut that
/// misses the diagram entirely (n = 0).
pub fn split_unknot_hopf() -> CutPresentation {
    CutPresentation {
        n: 0,
        tangle1: unknot(),
        tangle2: hopf(),
        boundary: vec![],
    }
}

/// Two crossingless circles crossing an eight-point cut. The boundary
/// connectivities of the two sides form the smallest non-modular pair in the
/// partition lattice, which stresses the closure-count arithmetic.
pub fn unlink_cut4() -> CutPresentation {
    let tangle1 = OrientedDiagram {
        crossings: vec![],
        edges: edges(vec![
            (1, bd(1), bd(4)),
            (2, bd(3), bd(2)),
            (3, bd(5), bd(8)),
            (4, bd(7), bd(6)),
        ]),
        free_loops: 0,
    };
    let tangle2 = OrientedDiagram {
        crossings: vec![],
        edges: edges(vec![
            (1, bd(8), bd(1)),
            (2, bd(2), bd(7)),
            (3, bd(6), bd(3)),
            (4, bd(4), bd(5)),
        ]),
        free_loops: 0,
    };
    let dirs = [
        (1, true, 1, 1),
        (2, false, 2, 2),
        (3, true, 2, 3),
        (4, false, 1, 4),
        (5, true, 3, 4),
        (6, false, 4, 3),
        (7, true, 4, 2),
        (8, false, 3, 1),
    ];
    CutPresentation {
        n: 4,
        tangle1,
        tangle2,
        boundary: dirs
            .iter()
            .map(|&(pos, into_tangle1, t1, t2)| BoundaryRecord {
                pos,
                into_tangle1,
                tangle1_edge: e(t1),
                tangle2_edge: e(t2),
            })
            .collect(),
    }
}

/// The crossingless unknot carrying a two-point cut.
pub fn unknot_cut() -> CutPresentation {
    let tangle1 = OrientedDiagram {
        crossings: vec![],
        edges: edges(vec![(1, bd(1), bd(2))]),
        free_loops: 0,
    };
    let tangle2 = OrientedDiagram {
        crossings: vec![],
        edges: edges(vec![(1, bd(2), bd(1))]),
        free_loops: 0,
    };
    CutPresentation {
        n: 1,
        tangle1,
        tangle2,
        boundary: vec![
            BoundaryRecord {
                pos: 1,
                into_tangle1: true,
                tangle1_edge: e(1),
                tangle2_edge: e(1),
            },
            BoundaryRecord {
                pos: 2,
                into_tangle1: false,
                tangle1_edge: e(1),
                tangle2_edge: e(1),
            },
        ],
    }
}

/// Mirror a whole cut presentation: flip every crossing in both tangles.
/// Boundary structure (positions, directions, edge names) is unchanged.
pub fn mirror_cut(cp: &CutPresentation) -> CutPresentation {
    CutPresentation {
        n: cp.n,
        tangle1: cp.tangle1.mirror(),
        tangle2: cp.tangle2.mirror(),
        boundary: cp.boundary.clone(),
    }
}

/// A named catalog item: either a plain diagram or a cut presentation.
pub enum CatalogItem {
    Diagram(OrientedDiagram),
    Cut(CutPresentation),
}

pub struct CatalogEntry {
    pub name: &'static str,
    pub notes: &'static str,
    pub item: CatalogItem,
}

/// Every built-in entry, in a fixed order.
pub fn entries() -> Vec<CatalogEntry> {
    use CatalogItem::*;
    vec![
        CatalogEntry {
            name: "unknot",
            notes: "crossingless circle",
            item: Diagram(unknot()),
        },
        CatalogEntry {
            name: "unknot_kink",
            notes: "unknot with one positive curl",
            item: Diagram(unknot_kink()),
        },
        CatalogEntry {
            name: "hopf",
            notes: "Hopf link, two positive crossings",
            item: Diagram(hopf()),
        },
        CatalogEntry {
            name: "hopf_reordered",
            notes: "Hopf link with crossings listed in the opposite order",
            item: Diagram(hopf_reordered()),
        },
        CatalogEntry {
            name: "mirror_hopf",
            notes: "Hopf link, two negative crossings",
            item: Diagram(mirror_hopf()),
        },
        CatalogEntry {
            name: "trefoil",
            notes: "right-handed trefoil, three positive crossings",
            item: Diagram(trefoil()),
        },
        CatalogEntry {
            name: "mirror_trefoil",
            notes: "left-handed trefoil, three negative crossings",
            item: Diagram(mirror_trefoil()),
        },
        CatalogEntry {
            name: "figure_eight",
            notes: "figure-eight knot, braid closure with writhe zero",
            item: Diagram(figure_eight()),
        },
        CatalogEntry {
            name: "solomon",
            notes: "two components winding twice, four positive crossings",
            item: Diagram(solomon()),
        },
        CatalogEntry {
            name: "mirror_solomon",
            notes: "mirror image of solomon",
            item: Diagram(mirror_solomon()),
        },
        CatalogEntry {
            name: "solomon_cut",
            notes: "solomon with the alternating four-point cut",
            item: Cut(solomon_cut()),
        },
        CatalogEntry {
            name: "mirror_solomon_cut",
            notes: "mirror of solomon_cut",
            item: Cut(mirror_cut(&solomon_cut())),
        },
        CatalogEntry {
            name: "half_solomon",
            notes: "clasp tangle closed by plain arcs, four-point cut",
            item: Cut(half_solomon()),
        },
        CatalogEntry {
            name: "mirror_half_solomon",
            notes: "mirror of half_solomon",
            item: Cut(mirror_cut(&half_solomon())),
        },
        CatalogEntry {
            name: "hopf_connected_sum",
            notes: "connected sum of two Hopf links, two-point cut at the neck",
            item: Cut(hopf_connected_sum()),
        },
        CatalogEntry {
            name: "mirror_hopf_connected_sum",
            notes: "mirror of hopf_connected_sum",
            item: Cut(mirror_cut(&hopf_connected_sum())),
        },
        CatalogEntry {
            name: "split_unknot_hopf",
            notes: "unknot next to a Hopf link, cut missing the diagram",
            item: Cut(split_unknot_hopf()),
        },
        CatalogEntry {
            name: "unknot_cut",
            notes: "crossingless unknot with a two-point cut",
            item: Cut(unknot_cut()),
        },
        CatalogEntry {
            name: "unlink_cut4",
            notes: "two crossingless circles through an eight-point cut",
            item: Cut(unlink_cut4()),
        },
        CatalogEntry {
            name: "square_knot_cut",
            notes: "left and right trefoils joined at a two-point neck",
            item: Cut(square_knot_cut()),
        },
    ]
}

pub fn diagram(name: &str) -> Option<OrientedDiagram> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .and_then(|e| match e.item {
            CatalogItem::Diagram(d) => Some(d),
            CatalogItem::Cut(_) => None,
        })
}

pub fn cut(name: &str) -> Option<CutPresentation> {
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .and_then(|e| match e.item {
            CatalogItem::Diagram(_) => None,
            CatalogItem::Cut(c) => Some(c),
        })
}

/// Names of every cut entry; the acceptance suite iterates over these.
pub fn cut_names() -> Vec<&'static str> {
    entries()
        .iter()
        .filter(|e| matches!(e.item, CatalogItem::Cut(_)))
        .map(|e| e.name)
        .collect()
}
