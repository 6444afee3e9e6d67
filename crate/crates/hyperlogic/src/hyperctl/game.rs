//! A two-player model-checking game equivalent to the bounded semantics.
//!
//! Game vertices pair a variable assignment with a subformula, a complement
//! flag `b`, and (for until obligations) a chosen position. The Verifier
//! claims the subformula holds when `b = 0` and fails when `b = 1`; the
//! Falsifier claims the opposite. Negation flips the flag, disjunction and
//! existential choices belong to the Verifier at `b = 0` and to the
//! Falsifier at `b = 1` (dually for universal choice), and an until is
//! played by picking a position within the assignment's periodicity window
//! and then challenging one of its obligations. Atoms and constants are
//! terminal: their winner is read directly off the label test against the
//! flag. At every other vertex a player with no move loses, which happens
//! exactly at quantifier vertices whose bounded path domain is empty.
//!
//! The game is a finite DAG: every move decreases the pair (subformula size,
//! obligation phase). Winners are computed by backward induction, entirely
//! independently of the recursive checker in this module's sibling, so the
//! two routes can be compared against each other.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fmt::Write as _;

use crate::error::Result;
use crate::hyperctl::check::{path_window, PathBounds};
use crate::logic::{HyperCTLFormula, PropName, VarName};
use crate::models::{lasso_paths, KripkeStructure, LassoPath};

/// The two players.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Verifier,
    Falsifier,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Verifier => Player::Falsifier,
            Player::Falsifier => Player::Verifier,
        }
    }

    fn letter(self) -> char {
        match self {
            Player::Verifier => 'V',
            Player::Falsifier => 'F',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Player::Verifier => f.write_str("Verifier"),
            Player::Falsifier => f.write_str("Falsifier"),
        }
    }
}

/// Core-fragment formula node in a flat arena.
#[derive(Debug, Clone)]
enum GNode {
    True,
    False,
    Atom(PropName, VarName),
    Not(usize),
    Or(usize, usize),
    Next(usize),
    Until(usize, usize),
    Exists(VarName, usize),
    Forall(VarName, usize),
}

struct GVertex {
    owner: Player,
    /// `Some(winner)` at terminal vertices (atoms and constants).
    terminal: Option<Player>,
    succs: Vec<usize>,
    label: String,
}

/// The constructed game graph. Vertex ids are assigned in discovery order
/// from the root, so identical inputs produce identical games.
pub struct Game {
    vertices: Vec<GVertex>,
    root: usize,
}

impl Game {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn owner(&self, id: usize) -> Player {
        self.vertices[id].owner
    }

    pub fn successors(&self, id: usize) -> &[usize] {
        &self.vertices[id].succs
    }

    /// The winner fixed at a terminal vertex, if `id` is terminal.
    pub fn terminal_winner(&self, id: usize) -> Option<Player> {
        self.vertices[id].terminal
    }

    /// The vertex description as printed in [`dump_game`] (without id and
    /// owner).
    pub fn label(&self, id: usize) -> &str {
        &self.vertices[id].label
    }
}

/// Outcome of solving a game: the winner from the root, and for every
/// vertex the winner owns and wins, the least winning successor in
/// construction order.
pub struct GameResult {
    pub winner: Player,
    pub strategy: BTreeMap<usize, usize>,
}

/// Bindings in binding order, each path in canonical current form.
type Snapshot = Vec<(VarName, LassoPath)>;

struct Builder<'a> {
    k: &'a KripkeStructure,
    bounds: PathBounds,
    nodes: Vec<GNode>,
    displays: Vec<String>,
    map: HashMap<(Snapshot, usize, u8, Option<usize>), usize>,
    vertices: Vec<GVertex>,
}

fn flatten(f: &HyperCTLFormula, nodes: &mut Vec<GNode>, displays: &mut Vec<String>) -> usize {
    let node = match f {
        HyperCTLFormula::True => GNode::True,
        HyperCTLFormula::False => GNode::False,
        HyperCTLFormula::Atom(p, v) => GNode::Atom(p.clone(), v.clone()),
        HyperCTLFormula::Not(a) => GNode::Not(flatten(a, nodes, displays)),
        HyperCTLFormula::Or(a, b) => {
            let l = flatten(a, nodes, displays);
            let r = flatten(b, nodes, displays);
            GNode::Or(l, r)
        }
        HyperCTLFormula::Next(a) => GNode::Next(flatten(a, nodes, displays)),
        HyperCTLFormula::Until(a, b) => {
            let l = flatten(a, nodes, displays);
            let r = flatten(b, nodes, displays);
            GNode::Until(l, r)
        }
        HyperCTLFormula::Exists(v, a) => {
            GNode::Exists(v.clone(), flatten(a, nodes, displays))
        }
        HyperCTLFormula::Forall(v, a) => {
            GNode::Forall(v.clone(), flatten(a, nodes, displays))
        }
        _ => unreachable!("formula was desugared"),
    };
    nodes.push(node);
    displays.push(f.to_string());
    nodes.len() - 1
}

impl Builder<'_> {
    fn rcnt(&self, snap: &Snapshot) -> usize {
        snap.last()
            .map(|(_, p)| p.head())
            .unwrap_or_else(|| self.k.initial())
    }

    fn advanced(&self, snap: &Snapshot, n: usize) -> Snapshot {
        snap.iter()
            .map(|(v, p)| (v.clone(), p.suffix(n).canonical()))
            .collect()
    }

    fn bound(&self, snap: &Snapshot, var: &str, path: LassoPath) -> Snapshot {
        let mut next: Snapshot = snap.iter().filter(|(v, _)| v != var).cloned().collect();
        next.push((var.to_string(), path));
        next
    }

    fn label_for(&self, snap: &Snapshot, node: usize, b: u8, j: Option<usize>) -> String {
        let mut parts: Vec<String> = snap
            .iter()
            .map(|(v, p)| format!("{v}={}", p.display_with(self.k)))
            .collect();
        parts.push(self.displays[node].clone());
        parts.push(format!("b={b}"));
        if let Some(jv) = j {
            parts.push(format!("j={jv}"));
        }
        format!("({})", parts.join(", "))
    }

    /// The vertex for this game position, building it (and everything it can
    /// reach) on first visit.
    fn vertex(&mut self, snap: Snapshot, node: usize, b: u8, j: Option<usize>) -> usize {
        if let Some(&id) = self.map.get(&(snap.clone(), node, b, j)) {
            return id;
        }
        let id = self.vertices.len();
        self.vertices.push(GVertex {
            owner: Player::Falsifier,
            terminal: None,
            succs: Vec::new(),
            label: self.label_for(&snap, node, b, j),
        });
        self.map.insert((snap.clone(), node, b, j), id);

        let verifier_if = |cond: bool| {
            if cond {
                Player::Verifier
            } else {
                Player::Falsifier
            }
        };
        let (owner, terminal, succs) = match (self.nodes[node].clone(), j) {
            (GNode::True, _) | (GNode::False, _) | (GNode::Atom(..), _) => {
                let value = match &self.nodes[node] {
                    GNode::True => true,
                    GNode::False => false,
                    GNode::Atom(a, x) => {
                        let path = snap
                            .iter()
                            .rev()
                            .find(|(v, _)| v == x)
                            .map(|(_, p)| p)
                            .expect("formula is closed");
                        self.k.label(path.head()).contains(a)
                    }
                    _ => unreachable!(),
                };
                let winner = verifier_if(value == (b == 0));
                (Player::Falsifier, Some(winner), Vec::new())
            }
            (GNode::Not(c), _) => {
                let s = self.vertex(snap, c, 1 - b, None);
                (Player::Falsifier, None, vec![s])
            }
            (GNode::Or(c, d), _) => {
                let l = self.vertex(snap.clone(), c, b, None);
                let r = self.vertex(snap, d, b, None);
                (verifier_if(b == 0), None, vec![l, r])
            }
            (GNode::Next(c), _) => {
                let s = self.vertex(self.advanced(&snap, 1), c, b, None);
                (Player::Falsifier, None, vec![s])
            }
            (GNode::Until(..), None) => {
                let (s, p) = path_window(snap.iter().map(|(_, path)| path));
                let succs = (0..s + p)
                    .map(|jv| self.vertex(snap.clone(), node, b, Some(jv)))
                    .collect();
                (verifier_if(b == 0), None, succs)
            }
            (GNode::Until(c, d), Some(jv)) => {
                let mut succs = vec![self.vertex(self.advanced(&snap, jv), d, b, None)];
                for m in 0..jv {
                    succs.push(self.vertex(self.advanced(&snap, m), c, b, None));
                }
                (verifier_if(b == 1), None, succs)
            }
            (GNode::Exists(v, c), _) => {
                let succs = self.quantifier_succs(&snap, &v, c, b);
                (verifier_if(b == 0), None, succs)
            }
            (GNode::Forall(v, c), _) => {
                let succs = self.quantifier_succs(&snap, &v, c, b);
                (verifier_if(b == 1), None, succs)
            }
        };
        self.vertices[id].owner = owner;
        self.vertices[id].terminal = terminal;
        self.vertices[id].succs = succs;
        id
    }

    fn quantifier_succs(&mut self, snap: &Snapshot, var: &str, body: usize, b: u8) -> Vec<usize> {
        let start = self.rcnt(snap);
        lasso_paths(self.k, start, self.bounds.max_stem, self.bounds.max_loop)
            .into_iter()
            .map(|path| self.vertex(self.bound(snap, var, path), body, b, None))
            .collect()
    }
}

/// Build the model-checking game for a closed formula on `k` under the
/// given path bounds. The root is the empty-assignment vertex for the whole
/// formula with `b = 0`.
pub fn build_game(
    phi: &HyperCTLFormula,
    k: &KripkeStructure,
    bounds: &PathBounds,
) -> Result<Game> {
    phi.validate_closed()?;
    let core = phi.desugar();
    let mut nodes = Vec::new();
    let mut displays = Vec::new();
    let root_node = flatten(&core, &mut nodes, &mut displays);
    let mut builder = Builder {
        k,
        bounds: *bounds,
        nodes,
        displays,
        map: HashMap::new(),
        vertices: Vec::new(),
    };
    let root = builder.vertex(Vec::new(), root_node, 0, None);
    Ok(Game {
        vertices: builder.vertices,
        root,
    })
}

/// Solve a game by backward induction: terminal vertices keep their fixed
/// winner, every other vertex is won by its owner exactly if some successor
/// is (so a stuck player loses). Returns the winner from the root and, for
/// every vertex the winner owns and wins, the least winning successor in
/// construction order.
pub fn solve_game(game: &Game) -> GameResult {
    fn winner_of(game: &Game, id: usize, memo: &mut Vec<Option<Player>>) -> Player {
        if let Some(w) = memo[id] {
            return w;
        }
        let v = &game.vertices[id];
        let mut w = match v.terminal {
            Some(winner) => winner,
            None => v.owner.opponent(),
        };
        for &s in &v.succs {
            if winner_of(game, s, memo) == v.owner {
                w = v.owner;
                break;
            }
        }
        memo[id] = Some(w);
        w
    }

    let mut memo = vec![None; game.vertices.len()];
    for id in 0..game.vertices.len() {
        winner_of(game, id, &mut memo);
    }
    let winner = memo[game.root].expect("solved");
    let mut strategy = BTreeMap::new();
    for (id, v) in game.vertices.iter().enumerate() {
        if v.owner == winner && memo[id] == Some(winner) && !v.succs.is_empty() {
            let choice = v
                .succs
                .iter()
                .copied()
                .find(|&s| memo[s] == Some(winner))
                .expect("winning vertex has a winning successor");
            strategy.insert(id, choice);
        }
    }
    GameResult { winner, strategy }
}

/// Deterministic text rendering: one `#id owner=V (…)` line per vertex in id
/// order, then one `#src -> #dst` line per edge in construction order.
pub fn dump_game(game: &Game) -> String {
    let mut out = String::new();
    for (id, v) in game.vertices.iter().enumerate() {
        let _ = writeln!(out, "#{id} owner={} {}", v.owner.letter(), v.label);
    }
    for (id, v) in game.vertices.iter().enumerate() {
        for &s in &v.succs {
            let _ = writeln!(out, "#{id} -> #{s}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperctl::check::check_bounded;
    use crate::logic::parse_hyperctl;
    use crate::models::letter;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn self_loop_a() -> KripkeStructure {
        KripkeStructure::new(
            vec![("v".into(), letter(["a"]))],
            "v",
            &[("v".into(), "v".into())],
        )
        .unwrap()
    }

    fn two_state() -> KripkeStructure {
        KripkeStructure::new(
            vec![("v0".into(), letter(["a"])), ("v1".into(), letter(["b"]))],
            "v0",
            &[
                ("v0".into(), "v1".into()),
                ("v1".into(), "v0".into()),
                ("v1".into(), "v1".into()),
            ],
        )
        .unwrap()
    }

    fn game_for(src: &str, k: &KripkeStructure, s: usize, l: usize) -> Game {
        build_game(
            &parse_hyperctl(src).unwrap(),
            k,
            &PathBounds::new(s, l).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn trivial_existential_game() {
        let k = self_loop_a();
        let game = game_for("exists p. a[p]", &k, 1, 1);
        assert_eq!(
            dump_game(&game),
            "#0 owner=V (exists p. a[p], b=0)\n\
             #1 owner=F (p=( v ), a[p], b=0)\n\
             #0 -> #1\n"
        );
        let result = solve_game(&game);
        assert_eq!(result.winner, Player::Verifier);
        assert_eq!(result.strategy.get(&0), Some(&1));
    }

    #[test]
    fn negation_flips_the_flag_twice() {
        let k = self_loop_a();
        let game = game_for("!(exists p. !a[p])", &k, 1, 1);
        let dump = dump_game(&game);
        // Root at b=0, the existential under it at b=1, the inner negation
        // still at b=1, and the atom back at b=0.
        assert!(dump.contains("(!(exists p. !a[p]), b=0)"));
        assert!(dump.contains("(exists p. !a[p], b=1)"));
        assert!(dump.contains("(p=( v ), !a[p], b=1)"));
        assert!(dump.contains("(p=( v ), a[p], b=0)"));
        assert_eq!(solve_game(&game).winner, Player::Verifier);
    }

    #[test]
    fn universal_vertices_belong_to_verifier_at_flag_one() {
        let k = self_loop_a();
        let game = game_for("!(forall p. a[p])", &k, 1, 1);
        let id = (0..game.vertex_count())
            .find(|&i| game.label(i).starts_with("(forall"))
            .unwrap();
        assert_eq!(game.owner(id), Player::Verifier);
        assert_eq!(solve_game(&game).winner, Player::Falsifier);
    }

    #[test]
    fn until_positions_are_challenged_by_the_opponent() {
        let k = two_state();
        let game = game_for("exists p. a[p] U b[p]", &k, 1, 1);
        // Path p = v0 ( v1 ) has window s + p = 2, so the until vertex
        // offers positions j = 0 and j = 1; the index vertices at b=0 belong
        // to the Falsifier.
        let head = (0..game.vertex_count())
            .find(|&i| {
                let label = game.label(i);
                label.starts_with("(p=") && label.contains(" U ") && !label.contains("j=")
            })
            .unwrap();
        assert_eq!(game.owner(head), Player::Verifier);
        let indexed: Vec<usize> = (0..game.vertex_count())
            .filter(|&i| game.label(i).contains("j="))
            .collect();
        assert!(!indexed.is_empty());
        for &i in &indexed {
            assert_eq!(game.owner(i), Player::Falsifier);
        }
        // An index vertex for j offers the second obligation at j and the
        // first obligation at every m < j.
        let j1 = indexed
            .iter()
            .copied()
            .find(|&i| game.label(i).ends_with("j=1)"))
            .unwrap();
        assert_eq!(game.successors(j1).len(), 2);
        assert_eq!(solve_game(&game).winner, Player::Verifier);
    }

    #[test]
    fn stuck_quantifiers_lose() {
        // A 3-cycle has no lasso within stem 2 / loop 2, so both quantifier
        // vertices are stuck and their owners lose.
        let k = KripkeStructure::new(
            vec![
                ("v0".into(), letter(["a"])),
                ("v1".into(), letter(["a"])),
                ("v2".into(), letter(["a"])),
            ],
            "v0",
            &[
                ("v0".into(), "v1".into()),
                ("v1".into(), "v2".into()),
                ("v2".into(), "v0".into()),
            ],
        )
        .unwrap();
        let existential = game_for("exists p. a[p]", &k, 2, 2);
        assert!(existential.successors(existential.root()).is_empty());
        assert_eq!(solve_game(&existential).winner, Player::Falsifier);
        let universal = game_for("forall p. false", &k, 2, 2);
        assert_eq!(solve_game(&universal).winner, Player::Verifier);
    }

    #[test]
    fn dump_and_strategy_are_deterministic() {
        let k = two_state();
        let a = game_for("forall p. exists q. G (a[p] <-> a[q])", &k, 2, 2);
        let b = game_for("forall p. exists q. G (a[p] <-> a[q])", &k, 2, 2);
        assert_eq!(dump_game(&a), dump_game(&b));
        assert_eq!(solve_game(&a).strategy, solve_game(&b).strategy);
    }

    /// Depth of the core fragment (leaves have depth 1).
    fn core_depth(f: &HyperCTLFormula) -> usize {
        match f {
            HyperCTLFormula::True | HyperCTLFormula::False | HyperCTLFormula::Atom(..) => 1,
            HyperCTLFormula::Not(a)
            | HyperCTLFormula::Next(a)
            | HyperCTLFormula::Exists(_, a)
            | HyperCTLFormula::Forall(_, a) => 1 + core_depth(a),
            HyperCTLFormula::Or(a, b) | HyperCTLFormula::Until(a, b) => {
                1 + core_depth(a).max(core_depth(b))
            }
            _ => unreachable!("formula was desugared"),
        }
    }

    fn longest_play(game: &Game, id: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(d) = memo[id] {
            return d;
        }
        let d = game
            .successors(id)
            .iter()
            .map(|&s| 1 + longest_play(game, s, memo))
            .max()
            .unwrap_or(0);
        memo[id] = Some(d);
        d
    }

    fn random_structure(rng: &mut ChaCha8Rng) -> KripkeStructure {
        let n = rng.gen_range(1..=4);
        let vertices: Vec<(String, _)> = (0..n)
            .map(|i| {
                let mut label = letter([] as [&str; 0]);
                if rng.gen_bool(0.5) {
                    label.insert("a".to_string());
                }
                if rng.gen_bool(0.5) {
                    label.insert("b".to_string());
                }
                (format!("v{i}"), label)
            })
            .collect();
        let mut edges = Vec::new();
        for i in 0..n {
            let mut any = false;
            for j in 0..n {
                if rng.gen_bool(0.5) {
                    edges.push((format!("v{i}"), format!("v{j}")));
                    any = true;
                }
            }
            if !any {
                let j = rng.gen_range(0..n);
                edges.push((format!("v{i}"), format!("v{j}")));
            }
        }
        KripkeStructure::new(vertices, "v0", &edges).unwrap()
    }

    fn random_formula(rng: &mut ChaCha8Rng, depth: usize, scope: &mut Vec<String>) -> HyperCTLFormula {
        let leaf = |rng: &mut ChaCha8Rng, scope: &[String]| {
            if scope.is_empty() || rng.gen_bool(0.2) {
                if rng.gen_bool(0.5) {
                    HyperCTLFormula::True
                } else {
                    HyperCTLFormula::False
                }
            } else {
                let var = scope[rng.gen_range(0..scope.len())].clone();
                let prop = if rng.gen_bool(0.5) { "a" } else { "b" };
                HyperCTLFormula::Atom(prop.to_string(), var)
            }
        };
        if depth == 0 {
            return leaf(rng, scope);
        }
        match rng.gen_range(0..9) {
            0 => {
                let var = format!("p{}", scope.len());
                scope.push(var.clone());
                let body = random_formula(rng, depth - 1, scope);
                scope.pop();
                HyperCTLFormula::exists(var, body)
            }
            1 => {
                let var = format!("p{}", scope.len());
                scope.push(var.clone());
                let body = random_formula(rng, depth - 1, scope);
                scope.pop();
                HyperCTLFormula::forall(var, body)
            }
            2 => random_formula(rng, depth - 1, scope).not(),
            3 => random_formula(rng, depth - 1, scope)
                .or(random_formula(rng, depth - 1, scope)),
            4 => random_formula(rng, depth - 1, scope)
                .and(random_formula(rng, depth - 1, scope)),
            5 => random_formula(rng, depth - 1, scope).next(),
            6 => random_formula(rng, depth - 1, scope)
                .until(random_formula(rng, depth - 1, scope)),
            7 => random_formula(rng, depth - 1, scope).eventually(),
            _ => random_formula(rng, depth - 1, scope).globally(),
        }
    }

    #[test]
    fn plays_are_bounded_by_twice_the_depth() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let k = random_structure(&mut rng);
            let phi = random_formula(&mut rng, 2, &mut Vec::new());
            let bounds = PathBounds::new(rng.gen_range(1..=2), rng.gen_range(1..=2)).unwrap();
            let game = build_game(&phi, &k, &bounds).unwrap();
            let mut memo = vec![None; game.vertex_count()];
            let longest = longest_play(&game, game.root(), &mut memo);
            let depth = core_depth(&phi.desugar());
            assert!(
                longest <= 2 * depth,
                "play of length {longest} exceeds 2 x depth {depth} for {phi}"
            );
        }
    }

    #[test]
    fn game_winner_matches_direct_checker_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for round in 0..100 {
            let k = random_structure(&mut rng);
            let phi = random_formula(&mut rng, 2, &mut Vec::new());
            let bounds = PathBounds::new(rng.gen_range(1..=2), rng.gen_range(1..=2)).unwrap();
            let direct = check_bounded(&phi, &k, &bounds).unwrap();
            let winner = solve_game(&build_game(&phi, &k, &bounds).unwrap()).winner;
            assert_eq!(
                winner == Player::Verifier,
                direct,
                "round {round}: game and direct checker disagree on {phi}"
            );
        }
    }
}
