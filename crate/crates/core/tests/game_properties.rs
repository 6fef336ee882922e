use copwin::dismantle::is_dismantlable;
use copwin::game::{
    c_g_of_m, cop_number, cops_win, optimal_robber_move, restricted_cop_number,
    teleport_cop_number, GameConfig, GameState, Label, RobberArena, Turn,
};
use copwin::generators::cycle;
use copwin::{isqrt, Graph};
use proptest::prelude::*;

/// Connected graph: a random tree on `n` vertices plus extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extra = proptest::collection::vec((0..n, 0..n), 0..2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let tree = parents.into_iter().enumerate().map(|(i, p)| (i + 1, p));
            let edges = tree.chain(extra.into_iter().filter(|(a, b)| a != b));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn exact(c: copwin::game::CopNumber) -> usize {
    c.exact().expect("small graphs resolve")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn more_cops_never_hurt(g in connected_graph(7)) {
        let mut won = false;
        for k in 1..=3 {
            let now = cops_win(&g, &GameConfig::standard(k)).unwrap().cops_win();
            prop_assert!(!won || now, "k={} lost after k-1 won", k);
            won = now;
        }
    }

    #[test]
    fn one_cop_iff_dismantlable(g in connected_graph(8)) {
        let one = cops_win(&g, &GameConfig::standard(1)).unwrap().cops_win();
        prop_assert_eq!(one, is_dismantlable(&g).unwrap());
    }

    #[test]
    fn teleporting_never_needs_more(g in connected_graph(7)) {
        let c = exact(cop_number(&g).unwrap());
        let c_t = exact(teleport_cop_number(&g).unwrap());
        prop_assert!(c_t <= c);
        prop_assert!(c_t <= isqrt(g.n() as u64) as usize);
    }

    #[test]
    fn smaller_arenas_need_fewer_cops(g in connected_graph(7), mask in 1u32..128) {
        let n = g.n();
        let small: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        prop_assume!(!small.is_empty());
        let big: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1 || v % 2 == 0).collect();
        let cs = exact(restricted_cop_number(&g, &RobberArena::induced(&g, &small).unwrap()).unwrap());
        let cb = exact(restricted_cop_number(&g, &RobberArena::induced(&g, &big).unwrap()).unwrap());
        prop_assert!(cs <= cb);
        prop_assert!(cb <= exact(cop_number(&g).unwrap()));
    }

    /// Cops following their table and the robber following his best reply
    /// reach capture in exactly the level of the starting state.
    #[test]
    fn strategy_tables_realise_levels(g in connected_graph(7)) {
        let c = exact(cop_number(&g).unwrap());
        let res = cops_win(&g, &GameConfig::standard(c)).unwrap();
        let mut cops = res.cop_placement().unwrap();
        let mut robber = res.robber_placement(&cops).unwrap();
        let Label::CopWin { level } = res.placement_label(&cops, robber).unwrap() else {
            // robber has nowhere safe to start
            prop_assert_eq!(res.capture_rounds(), Some(0));
            return Ok(());
        };
        prop_assert_eq!(Some(level), res.capture_rounds());
        for round in 1..=level {
            cops = res.cop_move(&cops, robber).unwrap().expect("winning state has a move");
            if cops.contains(&robber) {
                prop_assert_eq!(round, level);
                return Ok(());
            }
            robber = optimal_robber_move(&GameState::new(cops.clone(), robber, Turn::Robber), &res).unwrap();
            prop_assert!(!cops.contains(&robber));
        }
        prop_assert!(false, "no capture within {} rounds", level);
    }
}

#[test]
fn restricted_arena_bound_on_diameter_two_graphs() {
    // the induction's claim: c_G(m) <= isqrt(2m) for every m >= 4
    let c5 = cycle(5).unwrap();
    assert_eq!(c_g_of_m(&c5, 4).unwrap(), 1);
    assert_eq!(c_g_of_m(&c5, 5).unwrap(), 2);
    for g in copwin::enumerate::connected_classes(7).unwrap() {
        if g.diameter() != Some(2) {
            continue;
        }
        for m in 4..=7 {
            let c = c_g_of_m(&g, m).unwrap();
            assert!(c <= isqrt(2 * m as u64) as usize, "{g:?} m={m} c={c}");
        }
    }
}
