//! The retrograde solver against a direct fixed-point evaluation of the game
//! rules, on every connected graph with at most six vertices.

use std::collections::HashMap;

use copwin::enumerate::connected_classes;
use copwin::game::{cops_win, GameConfig, Variant};
use copwin::Graph;

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            go(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn closed(g: &Graph, v: usize) -> Vec<usize> {
    (0..g.n()).filter(|&u| u == v || g.has_edge(u, v)).collect()
}

/// Does `k` cops win, evaluating the rules literally until nothing changes?
fn naive_cops_win(g: &Graph, k: usize, teleport: bool, robber_may_pass: bool) -> bool {
    let n = g.n();
    let pos = multisets(n, k);
    let id: HashMap<Vec<usize>, usize> = pos.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // positions reachable in one cop move
    let cop_moves: Vec<Vec<usize>> = pos
        .iter()
        .map(|p| {
            let mut out = Vec::new();
            let mut stack = vec![Vec::new()];
            while let Some(partial) = stack.pop() {
                let i = partial.len();
                if i == k {
                    let mut q: Vec<usize> = partial;
                    q.sort();
                    out.push(id[&q]);
                    continue;
                }
                for w in closed(g, p[i]) {
                    let mut next = partial.clone();
                    next.push(w);
                    stack.push(next);
                }
            }
            out.sort();
            out.dedup();
            out
        })
        .collect();
    let robber_moves = |r: usize| -> Vec<usize> {
        closed(g, r).into_iter().filter(|&m| robber_may_pass || m != r).collect()
    };
    let dominated = |p: &[usize], v: usize| p.iter().any(|&c| c == v || g.has_edge(c, v));
    let lost = |p: &[usize], v: usize| if teleport { dominated(p, v) } else { p.contains(&v) };

    let mut cop_turn = vec![vec![false; n]; pos.len()];
    let mut rob_turn = vec![vec![false; n]; pos.len()];
    loop {
        let mut changed = false;
        for (pi, p) in pos.iter().enumerate() {
            for r in 0..n {
                if !rob_turn[pi][r] {
                    let win = p.contains(&r)
                        || robber_moves(r).iter().all(|&m| lost(p, m) || cop_turn[pi][m]);
                    if win {
                        rob_turn[pi][r] = true;
                        changed = true;
                    }
                }
                if !cop_turn[pi][r] {
                    let win = if teleport {
                        pos.iter()
                            .enumerate()
                            .any(|(qi, q)| !q.contains(&r) && rob_turn[qi][r])
                    } else {
                        cop_moves[pi].iter().any(|&qi| pos[qi].contains(&r) || rob_turn[qi][r])
                    };
                    if win {
                        cop_turn[pi][r] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    pos.iter()
        .enumerate()
        .any(|(pi, p)| (0..n).all(|r| lost(p, r) || cop_turn[pi][r]))
}

#[test]
fn solver_matches_rule_evaluation() {
    let mut checked = 0;
    for n in 1..=6 {
        for g in connected_classes(n).unwrap() {
            for k in 1..=2 {
                for (variant, pass) in [
                    (Variant::Standard, true),
                    (Variant::Standard, false),
                    (Variant::Teleport, true),
                    (Variant::Teleport, false),
                ] {
                    let teleport = variant == Variant::Teleport;
                    let mut cfg = if teleport { GameConfig::teleport(k) } else { GameConfig::standard(k) };
                    cfg.robber_may_pass = pass;
                    let fast = cops_win(&g, &cfg).unwrap().cops_win();
                    let slow = naive_cops_win(&g, k, teleport, pass);
                    assert_eq!(fast, slow, "{g:?} k={k} {variant:?} pass={pass}");
                    checked += 1;
                }
            }
        }
    }
    assert_eq!(checked, (1 + 1 + 2 + 6 + 21 + 112) * 8);
}
