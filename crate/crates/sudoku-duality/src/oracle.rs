//! Exhaustive ground truth for small boards, independent of the
//! solver, plus the verification ledger that sweeps the duality
//! properties over enumerated cases.
//!
//! Primal optima come from brute enumeration (full extended-board
//! enumeration up to side 3, completion search at side 4). Dual
//! optima come from raw sign enumeration where `2^(pair rows)` is
//! small, and otherwise from the per-group enumeration that ranges
//! each group over the signs of a value ordering; the ledger checks
//! the two enumerators against each other before anything relies on
//! the faster one.

use crate::duality::{dual_to_primal, primal_to_dual, Optimum};
use crate::error::Error;
use crate::extint::{all_nonzero, ExtInt};
use crate::pairdiff::{
    pair_differences, pair_scores, wrap_diagonals, Permutation,
};
use crate::problems::{Board, DualCertificate, Given, PrimalInstance};
use crate::solver::{solve, SolveOutcome};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Seed for every sampled family; recorded in ledger notes so runs
/// are replayable.
pub const SAMPLE_SEED: u64 = 20260823;

const MAX_ENUM_SIDE: usize = 4;

/// Exact minimum empty-cell count over all feasible boards, or the
/// marker that none exists. Supports sides up to 4; full extended
/// enumeration up to 3, completion search at 4.
pub fn exact_vp(inst: &PrimalInstance) -> Result<Optimum, Error> {
    match inst.n() {
        0..=3 => Ok(enumerate_vp(inst)),
        4 => Ok(completion_vp(inst)),
        n => Err(Error::SizeUnsupported {
            what: "exact primal optimum",
            n,
            max: MAX_ENUM_SIDE,
        }),
    }
}

fn enumerate_vp(inst: &PrimalInstance) -> Optimum {
    let n = inst.n();
    let cells = inst.cells();
    let free: Vec<usize> = (0..cells).filter(|&c| inst.clue(c).is_none()).collect();
    let base = n as u64 + 1;
    let total = base.pow(free.len() as u32);
    let mut board: Vec<ExtInt> = (0..cells)
        .map(|c| inst.clue(c).map_or(ExtInt::Inf, ExtInt::Fin))
        .collect();
    let mut best: Option<usize> = None;
    for code in 0..total {
        let mut rest = code;
        for &c in &free {
            let digit = rest % base;
            rest /= base;
            board[c] = if digit == 0 {
                ExtInt::Inf
            } else {
                ExtInt::Fin(digit as i64)
            };
        }
        let b = Board::from_cells(board.clone());
        if inst.in_fp(&b) {
            let fp = b.empty_count();
            if best.is_none_or(|v| fp < v) {
                best = Some(fp);
            }
        }
    }
    best.map_or(Optimum::Unsolvable, |v| Optimum::Value(v as i64))
}

/// Cells sharing a group with each cell, over all three families.
fn peer_lists(inst: &PrimalInstance) -> Vec<Vec<usize>> {
    let cells = inst.cells();
    let mut sets = vec![vec![false; cells]; cells];
    for sys in inst.systems() {
        for g in 0..inst.n() {
            let members = sys.group_cells(g);
            for &a in &members {
                for &b in &members {
                    if a != b {
                        sets[a][b] = true;
                    }
                }
            }
        }
    }
    sets.into_iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter_map(|(i, &p)| p.then_some(i))
                .collect()
        })
        .collect()
}

fn completion_vp(inst: &PrimalInstance) -> Optimum {
    let peers = peer_lists(inst);
    let cells = inst.cells();
    let mut board = vec![ExtInt::Inf; cells];
    let mut best: Option<usize> = None;

    fn rec(
        inst: &PrimalInstance,
        peers: &[Vec<usize>],
        idx: usize,
        board: &mut Vec<ExtInt>,
        empties: usize,
        best: &mut Option<usize>,
    ) {
        if let Some(b) = *best {
            if empties >= b {
                return;
            }
        }
        if idx == board.len() {
            *best = Some(empties);
            return;
        }
        let taken = |board: &[ExtInt], v: i64| {
            peers[idx]
                .iter()
                .any(|&p| board[p].model_eq(ExtInt::Fin(v)))
        };
        if let Some(v) = inst.clue(idx) {
            if !taken(board, v) {
                board[idx] = ExtInt::Fin(v);
                rec(inst, peers, idx + 1, board, empties, best);
                board[idx] = ExtInt::Inf;
            }
            return;
        }
        for v in 1..=inst.n() as i64 {
            if taken(board, v) {
                continue;
            }
            board[idx] = ExtInt::Fin(v);
            rec(inst, peers, idx + 1, board, empties, best);
            board[idx] = ExtInt::Inf;
        }
        rec(inst, peers, idx + 1, board, empties + 1, best);
    }

    rec(inst, &peers, 0, &mut board, 0, &mut best);
    best.map_or(Optimum::Unsolvable, |v| Optimum::Value(v as i64))
}

/// Exact maximum of the dual objective over feasible certificates, or
/// the marker that the feasible set is empty. Raw enumeration up to
/// side 3, per-group enumeration at side 4.
pub fn exact_vd(inst: &PrimalInstance) -> Result<Optimum, Error> {
    match inst.n() {
        0..=3 => exact_vd_raw(inst),
        4 => {
            let mut best: Option<i64> = None;
            for_each_transitive_certificate(inst, |c| {
                if inst.in_fd(c) {
                    let v = inst.f_d(c);
                    if best.is_none_or(|b| v > b) {
                        best = Some(v);
                    }
                }
            });
            Ok(best.map_or(Optimum::Unsolvable, Optimum::Value))
        }
        n => Err(Error::SizeUnsupported {
            what: "exact dual optimum",
            n,
            max: MAX_ENUM_SIDE,
        }),
    }
}

/// Raw enumeration over all `2^(pair rows)` certificates; needs at
/// most 24 pair rows.
pub fn exact_vd_raw(inst: &PrimalInstance) -> Result<Optimum, Error> {
    let mut best: Option<i64> = None;
    for_each_raw_certificate(inst, |c| {
        if inst.in_fd(c) {
            let v = inst.f_d(c);
            if best.is_none_or(|b| v > b) {
                best = Some(v);
            }
        }
    })?;
    Ok(best.map_or(Optimum::Unsolvable, Optimum::Value))
}

fn for_each_raw_certificate(
    inst: &PrimalInstance,
    mut f: impl FnMut(&DualCertificate),
) -> Result<(), Error> {
    let rows = inst.rows();
    if rows > 24 {
        return Err(Error::SizeUnsupported {
            what: "raw certificate enumeration",
            n: inst.n(),
            max: MAX_ENUM_SIDE,
        });
    }
    for code in 0u64..(1 << rows) {
        let lam: Vec<i64> = (0..rows)
            .map(|r| if code & (1 << r) != 0 { 1 } else { -1 })
            .collect();
        f(&DualCertificate::new(lam).expect("signs are -1 or +1"));
    }
    Ok(())
}

/// Calls `f` for every value ordering of `1..=n`, deterministic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[i64])) {
    fn rec(items: &mut Vec<i64>, k: usize, f: &mut impl FnMut(&[i64])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    let mut items: Vec<i64> = (1..=n as i64).collect();
    rec(&mut items, 0, &mut f);
}

/// The `n!` per-group sign patterns arising as difference signs of a
/// value ordering; exactly the patterns whose group scores are
/// pairwise distinct.
pub fn transitive_patterns(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| {
        out.push(
            pair_differences(p)
                .into_iter()
                .map(|d| if d > 0 { 1 } else { -1 })
                .collect(),
        );
    });
    out
}

fn for_each_transitive_certificate(
    inst: &PrimalInstance,
    mut f: impl FnMut(&DualCertificate),
) {
    let n = inst.n();
    let pats = transitive_patterns(n);
    let s = pats[0].len();
    let mut combo = vec![0usize; n];
    let mut lam = vec![0i64; n * s];
    loop {
        for (g, &p) in combo.iter().enumerate() {
            lam[g * s..(g + 1) * s].copy_from_slice(&pats[p]);
        }
        f(&DualCertificate::new(lam.clone()).expect("signs are -1 or +1"));
        let mut g = 0;
        loop {
            if g == n {
                return;
            }
            combo[g] += 1;
            if combo[g] < pats.len() {
                break;
            }
            combo[g] = 0;
            g += 1;
        }
    }
}

/// All feasible certificates by raw enumeration, in code order.
pub fn enumerate_fd_raw(inst: &PrimalInstance) -> Result<Vec<DualCertificate>, Error> {
    let mut out = Vec::new();
    for_each_raw_certificate(inst, |c| {
        if inst.in_fd(c) {
            out.push(c.clone());
        }
    })?;
    Ok(out)
}

/// All feasible certificates by per-group enumeration. Must agree
/// with [`enumerate_fd_raw`] as a set; the ledger checks that.
pub fn enumerate_fd_transitive(
    inst: &PrimalInstance,
) -> Result<Vec<DualCertificate>, Error> {
    if inst.n() > MAX_ENUM_SIDE {
        return Err(Error::SizeUnsupported {
            what: "per-group certificate enumeration",
            n: inst.n(),
            max: MAX_ENUM_SIDE,
        });
    }
    let mut out = Vec::new();
    for_each_transitive_certificate(inst, |c| {
        if inst.in_fd(c) {
            out.push(c.clone());
        }
    });
    Ok(out)
}

/// Searches slot-to-cell maps for a third family whose dual feasible
/// set is empty, scanning permutations in lexicographic order. Only
/// small sides; each attempt enumerates all certificates.
pub fn search_empty_third_family(
    n: usize,
    max_attempts: usize,
) -> Result<Option<Permutation>, Error> {
    if n > 3 {
        return Err(Error::SizeUnsupported {
            what: "empty dual-set search",
            n,
            max: 3,
        });
    }
    let mut map: Vec<usize> = (0..n * n).collect();
    for _ in 0..max_attempts {
        let third = Permutation::from_zero_based(map.clone()).expect("map is a permutation");
        let inst = PrimalInstance::with_third_family(n, third.clone(), vec![])?;
        let mut feasible = false;
        for_each_raw_certificate(&inst, |c| {
            if !feasible && inst.in_fd(c) {
                feasible = true;
            }
        })?;
        if !feasible {
            return Ok(Some(third));
        }
        if !next_permutation(&mut map) {
            break;
        }
    }
    Ok(None)
}

fn next_permutation(map: &mut [usize]) -> bool {
    if map.len() < 2 {
        return false;
    }
    let mut i = map.len() - 1;
    while i > 0 && map[i - 1] >= map[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = map.len() - 1;
    while map[j] <= map[i - 1] {
        j -= 1;
    }
    map.swap(i - 1, j);
    map[i..].reverse();
    true
}

/// One verified property: how many cases were checked and which, if
/// any, failed. A failing check always carries at least one
/// replayable counterexample; only the first few are kept verbatim.
#[derive(Debug, Clone)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub counterexamples: Vec<String>,
}

const MAX_COUNTEREXAMPLES: usize = 3;

impl TheoremCheck {
    fn new(id: &'static str) -> Self {
        TheoremCheck {
            id,
            checked: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// The outcome of a verification sweep: notes describing the
/// enumerated families (seeds included) and one entry per property.
#[derive(Debug, Clone)]
pub struct VerificationLedger {
    pub n: usize,
    pub notes: Vec<String>,
    pub checks: Vec<TheoremCheck>,
}

impl VerificationLedger {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, id: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Line-oriented report: `#` notes, then one
    /// `THEOREM <id> PASS|FAIL checked=<count>` line per property,
    /// with counterexample lines under failures.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for note in &self.notes {
            out.push_str("# ");
            out.push_str(note);
            out.push('\n');
        }
        for c in &self.checks {
            let verdict = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("THEOREM {} {} checked={}\n", c.id, verdict, c.checked));
            if !c.passed() {
                assert!(
                    !c.counterexamples.is_empty(),
                    "failing check without counterexample"
                );
                for ce in &c.counterexamples {
                    out.push_str(&format!("  counterexample: {ce}\n"));
                }
                if c.failures > c.counterexamples.len() as u64 {
                    out.push_str(&format!(
                        "  ({} further failures suppressed)\n",
                        c.failures - c.counterexamples.len() as u64
                    ));
                }
            }
        }
        out
    }
}

fn board_text(b: &Board) -> String {
    let cells: Vec<String> = b.cells().iter().map(|c| c.to_string()).collect();
    cells.join(" ")
}

fn cert_text(c: &DualCertificate) -> String {
    c.signs()
        .iter()
        .map(|&s| if s > 0 { '+' } else { '-' })
        .collect()
}

fn instance_text(inst: &PrimalInstance) -> String {
    let givens: Vec<String> = inst
        .givens()
        .iter()
        .map(|g| format!("({},{})", g.cell, g.value))
        .collect();
    let third: Vec<String> = inst
        .system(3)
        .perm()
        .to_one_based()
        .iter()
        .map(|c| c.to_string())
        .collect();
    format!(
        "n={} givens=[{}] third=[{}]",
        inst.n(),
        givens.join(" "),
        third.join(" ")
    )
}

/// Sign identity sweep: for every value ordering `p`, the scores of
/// its difference signs equal `2p - (n+1)`.
pub fn sign_identity_check(n: usize) -> TheoremCheck {
    sign_identity_check_with(n, pair_scores)
}

/// Same sweep with a pluggable score function, so the harness can be
/// shown to catch an injected fault.
fn sign_identity_check_with(
    n: usize,
    scores: impl Fn(usize, &[i64]) -> Vec<i64>,
) -> TheoremCheck {
    let mut check = TheoremCheck::new("sign-identity");
    let shift = n as i64 + 1;
    for_each_permutation(n, |p| {
        let signs: Vec<i64> = pair_differences(p)
            .into_iter()
            .map(|d| if d > 0 { 1 } else { -1 })
            .collect();
        let got = scores(n, &signs);
        let ok = got.iter().zip(p).all(|(&y, &v)| y + shift == 2 * v);
        check.case(ok, || format!("ordering={p:?} scores={got:?}"));
    });
    check
}

/// Runs the verification sweep for sides 2, 3, or 4. Families are
/// exhaustive where listed in the notes and seeded samples otherwise.
pub fn verify_theorems(n: usize) -> Result<VerificationLedger, Error> {
    match n {
        2 => Ok(verify_small(2)),
        3 => Ok(verify_small(3)),
        4 => Ok(verify_four()),
        _ => Err(Error::SizeUnsupported {
            what: "theorem verification",
            n,
            max: MAX_ENUM_SIDE,
        }),
    }
}

/// The instance families the sweeps and the acceptance suite share.
/// Side 2: identity third family, all clue sets of size at most 2.
/// Side 3: wrap-diagonal third family with seeded clue samples, plus
/// two seeded random third families. Side 4: standard blocks with
/// hand-picked boundary instances.
pub fn verification_instances(n: usize) -> Result<Vec<PrimalInstance>, Error> {
    match n {
        2 => {
            let mut out = Vec::new();
            for givens in given_sets_two() {
                out.push(PrimalInstance::with_third_family(
                    2,
                    Permutation::identity(4),
                    givens,
                )?);
            }
            Ok(out)
        }
        3 => Ok(instances_three()?.0),
        4 => instances_four(),
        _ => Err(Error::SizeUnsupported {
            what: "verification instance family",
            n,
            max: MAX_ENUM_SIDE,
        }),
    }
}

fn given_sets_two() -> Vec<Vec<Given>> {
    let mut sets = vec![vec![]];
    for cell in 0..4 {
        for value in 1..=2 {
            sets.push(vec![Given::new(cell, value)]);
        }
    }
    for a in 0..4 {
        for b in (a + 1)..4 {
            for va in 1..=2 {
                for vb in 1..=2 {
                    sets.push(vec![Given::new(a, va), Given::new(b, vb)]);
                }
            }
        }
    }
    sets
}

/// Seeded side-3 families; returns the instances and the ledger notes
/// describing them.
fn instances_three() -> Result<(Vec<PrimalInstance>, Vec<String>), Error> {
    let mut notes = vec![format!("sample seed: {SAMPLE_SEED}")];
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let fixed = wrap_diagonals(3);
    notes.push(format!(
        "fixed third family (one-based): {}",
        join_usize(&fixed.to_one_based())
    ));
    let mut extras = Vec::new();
    for _ in 0..2 {
        let mut map: Vec<usize> = (0..9).collect();
        map.shuffle(&mut rng);
        let p = Permutation::from_zero_based(map).expect("shuffle is a permutation");
        notes.push(format!(
            "extra third family (one-based): {}",
            join_usize(&p.to_one_based())
        ));
        extras.push(p);
    }

    let mut out = vec![PrimalInstance::with_third_family(3, fixed.clone(), vec![])?];
    for k in 1..=3usize {
        for _ in 0..4 {
            let mut cells: Vec<usize> = (0..9).collect();
            cells.shuffle(&mut rng);
            let mut givens: Vec<Given> = cells[..k]
                .iter()
                .map(|&c| Given::new(c, rng.gen_range(1..=3)))
                .collect();
            givens.sort_by_key(|g| g.cell);
            out.push(PrimalInstance::with_third_family(3, fixed.clone(), givens)?);
        }
    }
    for p in &extras {
        out.push(PrimalInstance::with_third_family(3, p.clone(), vec![])?);
        let cell = rng.gen_range(0..9);
        let value = rng.gen_range(1..=3);
        out.push(PrimalInstance::with_third_family(
            3,
            p.clone(),
            vec![Given::new(cell, value)],
        )?);
    }
    Ok((out, notes))
}

/// The frozen side-4 instance whose optima differ: pairwise
/// consistent clues that admit no completion. Its exact optima are
/// 2 (primal) and -1 (dual).
pub fn crafted_gap_instance() -> PrimalInstance {
    PrimalInstance::standard(
        4,
        vec![
            Given::new(0, 1),
            Given::new(1, 2),
            Given::new(2, 3),
            Given::new(7, 4),
        ],
    )
    .expect("clues are in range and distinct")
}

const GOLDEN_GRID: [i64; 16] = [3, 4, 1, 2, 2, 1, 3, 4, 1, 2, 4, 3, 4, 3, 2, 1];

fn instances_four() -> Result<Vec<PrimalInstance>, Error> {
    let golden_15: Vec<Given> = GOLDEN_GRID
        .iter()
        .enumerate()
        .take(15)
        .map(|(i, &v)| Given::new(i, v))
        .collect();
    let golden_full: Vec<Given> = GOLDEN_GRID
        .iter()
        .enumerate()
        .map(|(i, &v)| Given::new(i, v))
        .collect();
    Ok(vec![
        PrimalInstance::standard(4, vec![])?,
        PrimalInstance::standard(4, golden_15)?,
        PrimalInstance::standard(4, golden_full)?,
        crafted_gap_instance(),
        // same value twice in row 1: no feasible board at all
        PrimalInstance::standard(4, vec![Given::new(0, 1), Given::new(1, 1)])?,
    ])
}

fn join_usize(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn all_extended_boards(n: usize) -> Vec<Board> {
    let cells = n * n;
    let base = n as u64 + 1;
    let total = base.pow(cells as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut rest = code;
        let mut b = Vec::with_capacity(cells);
        for _ in 0..cells {
            let digit = rest % base;
            rest /= base;
            b.push(if digit == 0 {
                ExtInt::Inf
            } else {
                ExtInt::Fin(digit as i64)
            });
        }
        out.push(Board::from_cells(b));
    }
    out
}

fn all_complete_boards(n: usize) -> Vec<Board> {
    let cells = n * n;
    let base = n as u64;
    let total = base.pow(cells as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut rest = code;
        let mut b = Vec::with_capacity(cells);
        for _ in 0..cells {
            b.push(ExtInt::Fin((rest % base) as i64 + 1));
            rest /= base;
        }
        out.push(Board::from_cells(b));
    }
    out
}

fn all_certificates(rows: usize) -> Vec<DualCertificate> {
    (0u64..(1 << rows))
        .map(|code| {
            DualCertificate::new(
                (0..rows)
                    .map(|r| if code & (1 << r) != 0 { 1 } else { -1 })
                    .collect(),
            )
            .expect("signs are -1 or +1")
        })
        .collect()
}

fn families_nonzero(inst: &PrimalInstance, b: &Board) -> bool {
    inst.systems()
        .iter()
        .all(|sys| all_nonzero(&sys.apply(b.cells())))
}

/// Enumerate all complete feasible boards of a clue-free instance.
fn complete_feasible_grids(inst: &PrimalInstance) -> Vec<Board> {
    let peers = peer_lists(inst);
    let cells = inst.cells();
    let mut board = vec![ExtInt::Inf; cells];
    let mut out = Vec::new();

    fn rec(
        n: usize,
        peers: &[Vec<usize>],
        idx: usize,
        board: &mut Vec<ExtInt>,
        out: &mut Vec<Board>,
    ) {
        if idx == board.len() {
            out.push(Board::from_cells(board.clone()));
            return;
        }
        for v in 1..=n as i64 {
            if peers[idx]
                .iter()
                .any(|&p| board[p].model_eq(ExtInt::Fin(v)))
            {
                continue;
            }
            board[idx] = ExtInt::Fin(v);
            rec(n, peers, idx + 1, board, out);
            board[idx] = ExtInt::Inf;
        }
    }

    rec(inst.n(), &peers, 0, &mut board, &mut out);
    out
}

/// Shared sweep over one side's families. `boards` must cover every
/// board the board-quantified properties range over; `certs` likewise
/// for certificates.
struct Sweep {
    instances: Vec<PrimalInstance>,
    third_variants: Vec<PrimalInstance>,
    boards: Vec<Board>,
    certs: Vec<DualCertificate>,
    notes: Vec<String>,
}

fn verify_small(n: usize) -> VerificationLedger {
    let sweep = if n == 2 {
        let instances = verification_instances(2).expect("side 2 supported");
        let free = PrimalInstance::with_third_family(2, Permutation::identity(4), vec![])
            .expect("identity third family is valid");
        let diag = PrimalInstance::with_third_family(2, wrap_diagonals(2), vec![])
            .expect("diagonal third family is valid");
        Sweep {
            instances,
            third_variants: vec![free, diag],
            boards: all_extended_boards(2),
            certs: all_certificates(2),
            notes: vec![
                "clue sets: all of size <= 2 (33 instances), identity third family"
                    .to_string(),
                "boards: all 81 extended boards; certificates: all 4".to_string(),
                "third-family variants: identity and wrap diagonals".to_string(),
            ],
        }
    } else {
        let (instances, mut notes) = instances_three().expect("side 3 supported");
        let mut third_variants = vec![instances[0].clone()];
        for inst in &instances {
            if inst.givens().is_empty()
                && !third_variants
                    .iter()
                    .any(|v| v.system(3).perm() == inst.system(3).perm())
            {
                third_variants.push(inst.clone());
            }
        }
        notes.push("boards: all 19683 complete boards; certificates: all 512".to_string());
        Sweep {
            instances,
            third_variants,
            boards: all_complete_boards(3),
            certs: all_certificates(9),
            notes,
        }
    };
    run_sweep(n, sweep)
}

fn run_sweep(n: usize, sweep: Sweep) -> VerificationLedger {
    let shift = n as i64 + 1;
    let bound = n as i64 - 1;
    let mut checks = Vec::new();

    checks.push(sign_identity_check(n));

    let mut score_bound = TheoremCheck::new("score-bound");
    let mut score_parity = TheoremCheck::new("score-parity");
    for variant in &sweep.third_variants {
        for c in &sweep.certs {
            for r in 1..=3 {
                let scores = variant.system(r).apply_transpose(c.signs());
                score_bound.case(
                    scores.iter().all(|&y| -bound <= y && y <= bound),
                    || format!("family {r} cert={} scores={scores:?}", cert_text(c)),
                );
            }
            let scores = variant.certificate_scores(c);
            score_parity.case(
                scores.iter().all(|&y| (y + shift) % 2 == 0),
                || format!("cert={} scores={scores:?}", cert_text(c)),
            );
        }
    }
    checks.push(score_bound);
    checks.push(score_parity);

    let mut feasible_sign = TheoremCheck::new("feasible-sign-certificate");
    let mut roundtrip_board = TheoremCheck::new("roundtrip-board");
    for variant in &sweep.third_variants {
        for b in &sweep.boards {
            if !(b.is_complete() && families_nonzero(variant, b)) {
                continue;
            }
            let cert = primal_to_dual(variant, b).expect("complete and untied");
            feasible_sign.case(variant.in_fd(&cert), || {
                format!("{} board={}", instance_text(variant), board_text(b))
            });
            roundtrip_board.case(dual_to_primal(variant, &cert) == *b, || {
                format!("{} board={}", instance_text(variant), board_text(b))
            });
        }
    }
    checks.push(feasible_sign);

    let mut midpoint = TheoremCheck::new("midpoint-feasibility");
    let mut roundtrip_cert = TheoremCheck::new("roundtrip-certificate");
    for variant in &sweep.third_variants {
        for c in &sweep.certs {
            let x = dual_to_primal(variant, c);
            let lhs = variant.in_fd(c);
            let rhs = families_nonzero(variant, &x);
            midpoint.case(lhs == rhs, || {
                format!(
                    "{} cert={} midpoint={}",
                    instance_text(variant),
                    cert_text(c),
                    board_text(&x)
                )
            });
            if lhs {
                let back = primal_to_dual(variant, &x).expect("feasible midpoint is untied");
                roundtrip_cert.case(back == *c, || {
                    format!("{} cert={}", instance_text(variant), cert_text(c))
                });
            }
        }
    }
    checks.push(midpoint);
    checks.push(roundtrip_board);
    checks.push(roundtrip_cert);

    let mut complete_def = TheoremCheck::new("complete-feasible-solution");
    let mut dual_def = TheoremCheck::new("dual-zero-objective-solution");
    let mut to_cert = TheoremCheck::new("solution-to-certificate");
    let mut to_board = TheoremCheck::new("certificate-to-solution");
    let mut weak = TheoremCheck::new("weak-duality");
    let mut equal_vanish = TheoremCheck::new("equal-objectives-vanish");
    for inst in &sweep.instances {
        let mut feasible_boards = Vec::new();
        for b in &sweep.boards {
            complete_def.case(
                inst.is_pp_solution(b) == (inst.in_fp(b) && inst.f_p(b) == 0),
                || format!("{} board={}", instance_text(inst), board_text(b)),
            );
            if inst.in_fp(b) {
                feasible_boards.push(b);
            }
            if inst.is_pp_solution(b) {
                let cert = primal_to_dual(inst, b).expect("solution boards are untied");
                to_cert.case(inst.is_dp_solution(&cert), || {
                    format!("{} board={}", instance_text(inst), board_text(b))
                });
            }
        }
        let mut feasible_certs = Vec::new();
        for c in &sweep.certs {
            dual_def.case(
                inst.is_dp_solution(c) == (inst.in_fd(c) && inst.f_d(c) == 0),
                || format!("{} cert={}", instance_text(inst), cert_text(c)),
            );
            if inst.in_fd(c) {
                feasible_certs.push(c);
            }
            if inst.is_dp_solution(c) {
                let x = dual_to_primal(inst, c);
                to_board.case(inst.is_pp_solution(&x), || {
                    format!("{} cert={}", instance_text(inst), cert_text(c))
                });
            }
        }
        for b in &feasible_boards {
            for c in &feasible_certs {
                let fp = inst.f_p(b) as i64;
                let fd = inst.f_d(c);
                weak.case(fd <= 0 && 0 <= fp, || {
                    format!(
                        "{} board={} cert={}",
                        instance_text(inst),
                        board_text(b),
                        cert_text(c)
                    )
                });
                if fp == fd {
                    equal_vanish.case(fp == 0 && fd == 0, || {
                        format!(
                            "{} board={} cert={}",
                            instance_text(inst),
                            board_text(b),
                            cert_text(c)
                        )
                    });
                }
            }
        }
    }
    checks.push(complete_def);
    checks.push(dual_def);
    checks.push(to_cert);
    checks.push(to_board);
    checks.push(weak);
    checks.push(equal_vanish);

    let mut strong = TheoremCheck::new("strong-duality");
    let mut agreement = TheoremCheck::new("solver-agreement");
    let mut traces = TheoremCheck::new("descent-traces");
    for inst in &sweep.instances {
        let vp = exact_vp(inst).expect("side within enumeration bound");
        let vd = exact_vd(inst).expect("side within enumeration bound");
        if let (Optimum::Value(p), Optimum::Value(d)) = (vp, vd) {
            let eq = p == d;
            let primal_complete = p == 0;
            let dual_hits_all = d == 0;
            strong.case(
                eq == primal_complete && primal_complete == dual_hits_all,
                || format!("{} v_P={p} v_D={d}", instance_text(inst)),
            );
        }
        match solve(inst) {
            SolveOutcome::Solved(sol) => {
                agreement.case(vp == Optimum::Value(sol.v_p as i64), || {
                    format!("{} solver={} oracle={vp}", instance_text(inst), sol.v_p)
                });
                traces.case(sol.trace.is_valid(inst), || {
                    format!("{} trace invalid", instance_text(inst))
                });
            }
            SolveOutcome::Infeasible => {
                agreement.case(vp == Optimum::Unsolvable, || {
                    format!("{} solver=INFEASIBLE oracle={vp}", instance_text(inst))
                });
            }
        }
    }
    checks.push(strong);

    let mut enum_consistency = TheoremCheck::new("dual-enumeration-consistency");
    for variant in &sweep.third_variants {
        let raw = enumerate_fd_raw(variant).expect("side within raw bound");
        let fast = enumerate_fd_transitive(variant).expect("side within bound");
        let mut a: Vec<Vec<i64>> = raw.iter().map(|c| c.signs().to_vec()).collect();
        let mut b: Vec<Vec<i64>> = fast.iter().map(|c| c.signs().to_vec()).collect();
        a.sort();
        b.sort();
        enum_consistency.case(a == b, || {
            format!(
                "{} raw={} per-group={}",
                instance_text(variant),
                a.len(),
                b.len()
            )
        });
    }
    checks.push(enum_consistency);
    checks.push(agreement);
    checks.push(traces);

    VerificationLedger {
        n,
        notes: sweep.notes,
        checks,
    }
}

fn verify_four() -> VerificationLedger {
    let n = 4;
    let shift = 5i64;
    let bound = 3i64;
    let free = PrimalInstance::standard(4, vec![]).expect("blocks exist at side 4");
    let instances = instances_four().expect("side 4 supported");
    let grids = complete_feasible_grids(&free);
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let sampled: Vec<DualCertificate> = (0..4000)
        .map(|_| {
            DualCertificate::new(
                (0..24)
                    .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
                    .collect::<Vec<i64>>(),
            )
            .expect("signs are -1 or +1")
        })
        .collect();
    let notes = vec![
        format!("sample seed: {SAMPLE_SEED}"),
        format!("complete feasible grids enumerated: {}", grids.len()),
        "certificates: all 331776 per-group patterns plus 4000 random samples"
            .to_string(),
        "instances: clue-free, 15-clue and full golden grid, crafted gap, conflicting clues"
            .to_string(),
    ];
    let mut checks = Vec::new();

    checks.push(sign_identity_check(4));

    let mut score_bound = TheoremCheck::new("score-bound");
    let mut score_parity = TheoremCheck::new("score-parity");
    for c in &sampled {
        for r in 1..=3 {
            let scores = free.system(r).apply_transpose(c.signs());
            score_bound.case(
                scores.iter().all(|&y| -bound <= y && y <= bound),
                || format!("family {r} cert={} scores={scores:?}", cert_text(c)),
            );
        }
        let scores = free.certificate_scores(c);
        score_parity.case(
            scores.iter().all(|&y| (y + shift) % 2 == 0),
            || format!("cert={} scores={scores:?}", cert_text(c)),
        );
    }
    checks.push(score_bound);
    checks.push(score_parity);

    let mut feasible_sign = TheoremCheck::new("feasible-sign-certificate");
    let mut roundtrip_board = TheoremCheck::new("roundtrip-board");
    for b in &grids {
        let cert = primal_to_dual(&free, b).expect("grids are complete and untied");
        feasible_sign.case(free.in_fd(&cert), || format!("board={}", board_text(b)));
        roundtrip_board.case(dual_to_primal(&free, &cert) == *b, || {
            format!("board={}", board_text(b))
        });
    }
    checks.push(feasible_sign);

    let mut midpoint = TheoremCheck::new("midpoint-feasibility");
    let mut roundtrip_cert = TheoremCheck::new("roundtrip-certificate");
    let mut fd_members: Vec<DualCertificate> = Vec::new();
    for_each_transitive_certificate(&free, |c| {
        let x = dual_to_primal(&free, c);
        let lhs = free.in_fd(c);
        let rhs = families_nonzero(&free, &x);
        midpoint.case(lhs == rhs, || {
            format!("cert={} midpoint={}", cert_text(c), board_text(&x))
        });
        if lhs {
            fd_members.push(c.clone());
            let back = primal_to_dual(&free, &x).expect("feasible midpoint is untied");
            roundtrip_cert.case(back == *c, || format!("cert={}", cert_text(c)));
        }
    });
    for c in &sampled {
        let x = dual_to_primal(&free, c);
        midpoint.case(free.in_fd(c) == families_nonzero(&free, &x), || {
            format!("cert={} midpoint={}", cert_text(c), board_text(&x))
        });
    }
    checks.push(midpoint);
    checks.push(roundtrip_board);
    checks.push(roundtrip_cert);

    let mut complete_def = TheoremCheck::new("complete-feasible-solution");
    let mut dual_def = TheoremCheck::new("dual-zero-objective-solution");
    let mut to_cert = TheoremCheck::new("solution-to-certificate");
    let mut to_board = TheoremCheck::new("certificate-to-solution");
    let mut weak = TheoremCheck::new("weak-duality");
    for inst in &instances {
        for b in &grids {
            complete_def.case(
                inst.is_pp_solution(b) == (inst.in_fp(b) && inst.f_p(b) == 0),
                || format!("{} board={}", instance_text(inst), board_text(b)),
            );
            if inst.is_pp_solution(b) {
                let cert = primal_to_dual(inst, b).expect("solution boards are untied");
                to_cert.case(inst.is_dp_solution(&cert), || {
                    format!("{} board={}", instance_text(inst), board_text(b))
                });
            }
        }
        for c in sampled.iter().take(400).chain(fd_members.iter()) {
            dual_def.case(
                inst.is_dp_solution(c) == (inst.in_fd(c) && inst.f_d(c) == 0),
                || format!("{} cert={}", instance_text(inst), cert_text(c)),
            );
            if inst.is_dp_solution(c) {
                let x = dual_to_primal(inst, c);
                to_board.case(inst.is_pp_solution(&x), || {
                    format!("{} cert={}", instance_text(inst), cert_text(c))
                });
            }
            if inst.in_fd(c) {
                for b in grids.iter().take(20) {
                    if inst.in_fp(b) {
                        weak.case(inst.f_d(c) <= 0 && inst.f_p(b) as i64 >= 0, || {
                            format!(
                                "{} board={} cert={}",
                                instance_text(inst),
                                board_text(b),
                                cert_text(c)
                            )
                        });
                    }
                }
            }
        }
    }
    checks.push(complete_def);
    checks.push(dual_def);
    checks.push(to_cert);
    checks.push(to_board);
    checks.push(weak);

    let mut strong = TheoremCheck::new("strong-duality");
    let mut agreement = TheoremCheck::new("solver-agreement");
    let mut traces = TheoremCheck::new("descent-traces");
    for inst in &instances {
        let vp = exact_vp(inst).expect("side 4 supported");
        let vd = exact_vd(inst).expect("side 4 supported");
        if let (Optimum::Value(p), Optimum::Value(d)) = (vp, vd) {
            let eq = p == d;
            let primal_complete = p == 0;
            let dual_hits_all = d == 0;
            strong.case(
                eq == primal_complete && primal_complete == dual_hits_all,
                || format!("{} v_P={p} v_D={d}", instance_text(inst)),
            );
        }
        match solve(inst) {
            SolveOutcome::Solved(sol) => {
                agreement.case(vp == Optimum::Value(sol.v_p as i64), || {
                    format!("{} solver={} oracle={vp}", instance_text(inst), sol.v_p)
                });
                traces.case(sol.trace.is_valid(inst), || {
                    format!("{} trace invalid", instance_text(inst))
                });
            }
            SolveOutcome::Infeasible => {
                agreement.case(vp == Optimum::Unsolvable, || {
                    format!("{} solver=INFEASIBLE oracle={vp}", instance_text(inst))
                });
            }
        }
    }
    checks.push(strong);
    checks.push(agreement);
    checks.push(traces);

    VerificationLedger {
        n,
        notes,
        checks,
    }
}
