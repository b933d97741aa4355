//! Fine zonotopal tilings of the three-dimensional cyclic zonotope `Z(n,3)`.
//!
//! A tiling is stored purely combinatorially as its set of parallelotope
//! tiles `τ_{S,a,b,c}`: base set `S` plus three free indices. The geometry is
//! derived on demand from the cyclic configuration `v_i = (1, x_i, x_i²)`.
//! Horizontal sections are triangulated plabic tilings: the tile with base
//! `S` and free `{a,b,c}` meets level `|S|+1` in the white triangle
//! `(Sa, Sb, Sc)` and level `|S|+2` in the black triangle `(Sab, Sac, Sbc)`.
//!
//! Validation is layered: the cheap combinatorial route (sections form an
//! admissible family and reassemble to the same tile set), exact volumes
//! (tile volumes are Vandermonde products and must sum to the zonotope
//! volume), and randomized exact-rational point sampling (every sampled
//! interior point lies in exactly one tile).

use crate::collection::{SeparatedCollection, SeparationKind};
use crate::geometry::vandermonde;
use crate::plabic_tiling::{Color, TriangulatedPlabicTiling};
use crate::subset::{binomial, GroundSet, Subset};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// The cyclic vector configuration: `v_i = (1, x_i, x_i²)` for strictly
/// increasing positive integers `x_i` (default `x_i = i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicConfig {
    ground: GroundSet,
    xs: Vec<i64>,
}

impl CyclicConfig {
    pub fn new(ground: GroundSet, xs: Vec<i64>) -> Result<Self> {
        if xs.len() != ground.n() as usize {
            return Err(Error::InvalidDocument(
                "configuration needs one parameter per ground element".into(),
            ));
        }
        if xs[0] <= 0 || xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDocument(
                "configuration parameters must be strictly increasing and positive".into(),
            ));
        }
        // keeps every determinant in the point-sampling path inside i128
        if *xs.last().unwrap() > 10_000 {
            return Err(Error::InvalidDocument(
                "configuration parameters must be at most 10000".into(),
            ));
        }
        Ok(CyclicConfig { ground, xs })
    }

    pub fn standard(ground: GroundSet) -> Self {
        CyclicConfig {
            ground,
            xs: (1..=ground.n() as i64).collect(),
        }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn xs(&self) -> &[i64] {
        &self.xs
    }

    fn x(&self, i: u8) -> i64 {
        self.xs[(i - 1) as usize]
    }

    pub fn vector(&self, i: u8) -> [i64; 3] {
        let x = self.x(i);
        [1, x, x * x]
    }

    /// `|det(v_a, v_b, v_c)|`: the volume of any tile with free `{a,b,c}`.
    pub fn tile_volume(&self, tile: &Tile) -> i128 {
        let [a, b, c] = tile.free;
        vandermonde(self.x(a), self.x(b), self.x(c)).abs()
    }

    /// Volume of `Z(n,3)`: the sum of `|det|` over all triples.
    pub fn zonotope_volume(&self) -> i128 {
        let n = self.ground.n();
        let mut acc = 0i128;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    acc += vandermonde(self.x(a), self.x(b), self.x(c));
                }
            }
        }
        acc
    }
}

/// A signed subset `X = (X⁺, X⁻)` of `[n]`: a face `τ_X` of the zonotope,
/// shifted by the vectors in `X⁺` and spanned by the segments of its zero
/// set `[n] − X⁺ − X⁻`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedSubset {
    pub plus: Subset,
    pub minus: Subset,
}

impl SignedSubset {
    pub fn new(plus: Subset, minus: Subset) -> Result<Self> {
        if !plus.intersection(minus).is_empty() {
            return Err(Error::InvalidDocument(
                "signed subset needs disjoint plus and minus parts".into(),
            ));
        }
        Ok(SignedSubset { plus, minus })
    }

    pub fn support(&self) -> Subset {
        self.plus.union(self.minus)
    }

    pub fn zero(&self, g: GroundSet) -> Subset {
        self.support().complement(g)
    }
}

/// A parallelotope tile `τ_{S,a,b,c}`: its eight vertex labels are
/// `S, Sa, Sb, Sc, Sab, Sac, Sbc, Sabc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tile {
    #[serde(rename = "S")]
    pub base: Subset,
    pub free: [u8; 3],
}

impl Tile {
    pub fn new(base: Subset, free: [u8; 3]) -> Result<Self> {
        let [a, b, c] = free;
        let ok = a < b && b < c && a >= 1 && !base.contains(a) && !base.contains(b)
            && !base.contains(c);
        if !ok {
            return Err(Error::InvalidDocument(format!(
                "bad tile: base {:?}, free {:?}",
                base.to_vec(),
                free
            )));
        }
        Ok(Tile { base, free })
    }

    pub fn vertices(&self) -> [Subset; 8] {
        let s = self.base;
        let [a, b, c] = self.free;
        [
            s,
            s.with(a),
            s.with(b),
            s.with(c),
            s.with(a).with(b),
            s.with(a).with(c),
            s.with(b).with(c),
            s.with(a).with(b).with(c),
        ]
    }

    pub fn white_triangle(&self) -> [Subset; 3] {
        let s = self.base;
        let [a, b, c] = self.free;
        [s.with(a), s.with(b), s.with(c)]
    }

    pub fn black_triangle(&self) -> [Subset; 3] {
        let s = self.base;
        let [a, b, c] = self.free;
        [s.with(a).with(b), s.with(a).with(c), s.with(b).with(c)]
    }

    /// The tile as a signed subset: `X⁺ = S`, `X⁰ = {a,b,c}`, `X⁻` the rest.
    pub fn as_signed(&self, g: GroundSet) -> SignedSubset {
        let free = Subset::from_elems(&self.free);
        SignedSubset {
            plus: self.base,
            minus: self.base.union(free).complement(g),
        }
    }

    /// Tile of a full-support signed subset with a three-element zero set.
    pub fn from_signed(x: SignedSubset, g: GroundSet) -> Result<Self> {
        let zero = x.zero(g).to_vec();
        if zero.len() != 3 {
            return Err(Error::InvalidDocument(format!(
                "tile needs a three-element zero set, got {zero:?}"
            )));
        }
        Tile::new(x.plus, [zero[0], zero[1], zero[2]])
    }
}

/// A fine zonotopal tiling of `Z(n,3)` as its set of tiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZonotopalTiling {
    config: CyclicConfig,
    tiles: BTreeSet<Tile>,
}

/// Outcome of the layered validation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub tile_count: u64,
    pub expected_tile_count: u64,
    pub volume: u64,
    pub expected_volume: u64,
    pub volume_ok: bool,
    pub sections_ok: bool,
    pub sections_error: Option<String>,
    pub vertex_count: u64,
    pub expected_vertex_count: u64,
    pub chord_separated_ok: bool,
    pub points_sampled: u64,
    pub point_failures: u64,
    pub boundary_resamples: u64,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.tile_count == self.expected_tile_count
            && self.volume_ok
            && self.sections_ok
            && self.chord_separated_ok
            && self.vertex_count == self.expected_vertex_count
            && self.point_failures == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ValidateOpts {
    pub points: u64,
    pub seed: u64,
}

impl Default for ValidateOpts {
    fn default() -> Self {
        ValidateOpts {
            points: 10_000,
            seed: 0,
        }
    }
}

impl ZonotopalTiling {
    pub fn new(config: CyclicConfig, tiles: impl IntoIterator<Item = Tile>) -> Result<Self> {
        let ground = config.ground();
        let tiles: BTreeSet<Tile> = tiles.into_iter().collect();
        for t in &tiles {
            t.base.check_fits(ground)?;
            if t.free[2] > ground.n() {
                return Err(Error::SubsetOutOfRange(t.free.to_vec(), ground.n()));
            }
        }
        Ok(ZonotopalTiling { config, tiles })
    }

    pub fn config(&self) -> &CyclicConfig {
        &self.config
    }

    pub fn ground(&self) -> GroundSet {
        self.config.ground()
    }

    pub fn tiles(&self) -> &BTreeSet<Tile> {
        &self.tiles
    }

    pub fn canonical_key(&self) -> Vec<(u64, [u8; 3])> {
        self.tiles.iter().map(|t| (t.base.mask(), t.free)).collect()
    }

    /// All vertex labels of all tiles.
    pub fn vert(&self) -> SeparatedCollection {
        let mut sets = BTreeSet::new();
        for t in &self.tiles {
            sets.extend(t.vertices());
        }
        if self.ground().n() < 3 {
            // Z(n,3) with n < 3 has no full-dimensional tile; its vertex set
            // is all of 2^[n]
            sets.extend(self.ground().subsets().into_iter().flatten());
        }
        SeparatedCollection::new(self.ground(), SeparationKind::Chord, sets).unwrap()
    }

    /// The horizontal section at height `i`, as a triangulated plabic tiling.
    pub fn section(&self, i: u8) -> Result<TriangulatedPlabicTiling> {
        let n = self.ground().n();
        if i > n {
            return Err(Error::LevelOutOfRange { level: i, n });
        }
        let slice = self.vert().level_slice(i)?;
        let mut triangles: Vec<(Color, [Subset; 3])> = Vec::new();
        for t in &self.tiles {
            let k = t.base.card();
            if k + 1 == i {
                triangles.push((Color::White, t.white_triangle()));
            }
            if k + 2 == i {
                triangles.push((Color::Black, t.black_triangle()));
            }
        }
        TriangulatedPlabicTiling::from_parts(&slice, &triangles)
    }

    /// Sections at every height `0..=n`.
    pub fn sections(&self) -> Result<Vec<TriangulatedPlabicTiling>> {
        (0..=self.ground().n()).map(|i| self.section(i)).collect()
    }

    /// Tiles grouped by base set.
    fn tiles_by_base(&self) -> HashMap<Subset, Vec<[u8; 3]>> {
        let mut map: HashMap<Subset, Vec<[u8; 3]>> = HashMap::new();
        for t in &self.tiles {
            map.entry(t.base).or_default().push(t.free);
        }
        map
    }

    /// All `(S, {a,b,c,d})` whose four local tiles form one of the two fine
    /// tilings of the sub-zonotope `τ_(S, [n]−Sabcd)`.
    pub fn mutable_quadruples(&self) -> Vec<(Subset, [u8; 4])> {
        let mut found = BTreeSet::new();
        for (&s, frees) in &self.tiles_by_base() {
            for (idx, &t1) in frees.iter().enumerate() {
                for &t2 in &frees[idx + 1..] {
                    let u1 = Subset::from_elems(&t1);
                    let u2 = Subset::from_elems(&t2);
                    let q = u1.union(u2);
                    if q.card() != 4 {
                        continue;
                    }
                    let quad: Vec<u8> = q.to_vec();
                    let [a, b, c, d] = [quad[0], quad[1], quad[2], quad[3]];
                    let shared = u1.intersection(u2);
                    let diag_ac = shared == Subset::from_elems(&[a, c]);
                    let diag_bd = shared == Subset::from_elems(&[b, d]);
                    if !(diag_ac || diag_bd) {
                        continue;
                    }
                    if self.local_config(s, [a, b, c, d]).is_some() {
                        found.insert((s, [a, b, c, d]));
                    }
                }
            }
        }
        found.into_iter().collect()
    }

    /// Which of the two local configurations on `(S, Q)` is present, if any.
    /// Returns the four tiles to remove and the four to insert.
    fn local_config(&self, s: Subset, q: [u8; 4]) -> Option<(Vec<Tile>, Vec<Tile>)> {
        let [a, b, c, d] = q;
        if s.contains(a) || s.contains(b) || s.contains(c) || s.contains(d) {
            return None;
        }
        let tile = |base: Subset, x: u8, y: u8, z: u8| {
            let mut f = [x, y, z];
            f.sort_unstable();
            Tile { base, free: f }
        };
        // the configuration containing the vertex S∪{a,c}
        let ac = vec![
            tile(s, a, b, c),
            tile(s, a, c, d),
            tile(s.with(a), b, c, d),
            tile(s.with(c), a, b, d),
        ];
        // the configuration containing the vertex S∪{b,d}
        let bd = vec![
            tile(s, a, b, d),
            tile(s, b, c, d),
            tile(s.with(b), a, c, d),
            tile(s.with(d), a, b, c),
        ];
        if ac.iter().all(|t| self.tiles.contains(t)) {
            Some((ac, bd))
        } else if bd.iter().all(|t| self.tiles.contains(t)) {
            Some((bd, ac))
        } else {
            None
        }
    }

    /// Replace the four tiles on `(S, Q)` by the other fine tiling of their
    /// union. An involution; the vertex labels change by exactly
    /// `S∪{b,d} ↔ S∪{a,c}`.
    pub fn mutate(&self, s: Subset, q: [u8; 4]) -> Result<Self> {
        let sorted = {
            let mut qq = q;
            qq.sort_unstable();
            qq
        };
        let Some((remove, insert)) = self.local_config(s, sorted) else {
            return Err(Error::NotMutable(s.to_vec(), sorted));
        };
        let mut tiles = self.tiles.clone();
        for t in &remove {
            tiles.remove(t);
        }
        for t in &insert {
            tiles.insert(*t);
        }
        Ok(ZonotopalTiling {
            config: self.config.clone(),
            tiles,
        })
    }

    /// The set of quadruples `{a,b,c,d}` (a<b<c<d) witnessed by a vertex
    /// label containing `{a,c}` and avoiding `{b,d}`. Errors if any quadruple
    /// has conflicting witnesses or none at all.
    pub fn ziegler_map(&self) -> Result<BTreeSet<[u8; 4]>> {
        let n = self.ground().n();
        let labels = self.vert().sorted_sets();
        let mut out = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        let inner = Subset::from_elems(&[a, c]);
                        let outer = Subset::from_elems(&[b, d]);
                        let pro = labels
                            .iter()
                            .any(|u| inner.is_subset_of(*u) && u.intersection(outer).is_empty());
                        let contra = labels
                            .iter()
                            .any(|u| outer.is_subset_of(*u) && u.intersection(inner).is_empty());
                        match (pro, contra) {
                            (true, false) => {
                                out.insert([a, b, c, d]);
                            }
                            (false, true) => {}
                            (true, true) => {
                                return Err(Error::ConflictingWitnesses([a, b, c, d]))
                            }
                            (false, false) => return Err(Error::MissingWitness([a, b, c, d])),
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Layered validation; see module docs. Deterministic given the options.
    pub fn validate(&self, opts: ValidateOpts) -> ValidationReport {
        self.validate_impl(opts, false)
    }

    /// Parallel point sampling; identical result to [`Self::validate`].
    #[cfg(feature = "parallel")]
    pub fn par_validate(&self, opts: ValidateOpts) -> ValidationReport {
        self.validate_impl(opts, true)
    }

    fn validate_impl(&self, opts: ValidateOpts, parallel: bool) -> ValidationReport {
        let n = self.ground().n();
        let expected_tile_count = binomial(n, 3);
        let tile_count = self.tiles.len() as u64;

        let volume: i128 = self.tiles.iter().map(|t| self.config.tile_volume(t)).sum();
        let expected_volume = self.config.zonotope_volume();

        let (sections_ok, sections_error) = match self.check_sections() {
            Ok(()) => (true, None),
            Err(e) => (false, Some(e.to_string())),
        };

        let vert = self.vert();
        let chord_separated_ok = vert.is_pairwise_separated().is_none();
        let expected_vertex_count = (0..=3.min(n)).map(|k| binomial(n, k)).sum();

        let (point_failures, boundary_resamples) = self.sample_points(opts, parallel);

        ValidationReport {
            tile_count,
            expected_tile_count,
            volume: volume as u64,
            expected_volume: expected_volume as u64,
            volume_ok: volume == expected_volume,
            sections_ok,
            sections_error,
            vertex_count: vert.len() as u64,
            expected_vertex_count,
            chord_separated_ok,
            points_sampled: opts.points,
            point_failures,
            boundary_resamples,
        }
    }

    /// Sections must form an admissible family that reassembles to the same
    /// tile set.
    fn check_sections(&self) -> Result<()> {
        let sections = self.sections()?;
        let rebuilt = assemble(&self.config, &sections)?;
        if rebuilt.tiles != self.tiles {
            return Err(Error::InvalidTiling(
                "sections do not reassemble to the same tile set".into(),
            ));
        }
        Ok(())
    }

    /// Random exact-rational points, each required to lie strictly inside
    /// exactly one tile. Points on any tile boundary are resampled.
    fn sample_points(&self, opts: ValidateOpts, parallel: bool) -> (u64, u64) {
        const DEN: i128 = 1 << 16;
        let n = self.ground().n() as usize;
        let tiles: Vec<&Tile> = self.tiles.iter().collect();
        if tiles.is_empty() {
            return (0, 0);
        }

        // Precompute per-tile data: base vector, free vectors, determinant.
        struct TileGeom {
            base: [i128; 3],
            cols: [[i128; 3]; 3],
            det: i128,
            level_lo: i128,
            level_hi: i128,
        }
        let geoms: Vec<TileGeom> = tiles
            .iter()
            .map(|t| {
                let mut base = [0i128; 3];
                for i in t.base.elems() {
                    let v = self.config.vector(i);
                    for (slot, comp) in v.iter().enumerate() {
                        base[slot] += *comp as i128;
                    }
                }
                let cols: Vec<[i128; 3]> = t
                    .free
                    .iter()
                    .map(|&i| {
                        let v = self.config.vector(i);
                        [v[0] as i128, v[1] as i128, v[2] as i128]
                    })
                    .collect();
                let cols = [cols[0], cols[1], cols[2]];
                let det = det3(cols[0], cols[1], cols[2]);
                let lo = t.base.card() as i128 * DEN;
                TileGeom {
                    base,
                    cols,
                    det,
                    level_lo: lo,
                    level_hi: lo + 3 * DEN,
                }
            })
            .collect();

        let check_point = |seed_offset: u64| -> (u64, u64) {
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(seed_offset));
            let mut resamples = 0u64;
            'resample: loop {
                // p·DEN = Σ k_i v_i with k_i uniform in (0, DEN)
                let mut p = [0i128; 3];
                for i in 1..=n as u8 {
                    let k = rng.random_range(1..DEN as i64) as i128;
                    let v = self.config.vector(i);
                    for slot in 0..3 {
                        p[slot] += k * v[slot] as i128;
                    }
                }
                let mut containing = 0u64;
                for gm in &geoms {
                    if p[0] <= gm.level_lo || p[0] >= gm.level_hi {
                        continue;
                    }
                    let w = [
                        p[0] - DEN * gm.base[0],
                        p[1] - DEN * gm.base[1],
                        p[2] - DEN * gm.base[2],
                    ];
                    let mut inside = true;
                    for slot in 0..3 {
                        let mut cols = gm.cols;
                        cols[slot] = w;
                        let num = det3(cols[0], cols[1], cols[2]);
                        // λ = num / det must satisfy 0 < λ < DEN strictly
                        let (num, det) = if gm.det < 0 { (-num, -gm.det) } else { (num, gm.det) };
                        if num == 0 || num == DEN * det {
                            resamples += 1;
                            if resamples > 200 {
                                // give up treating it as boundary noise
                                return (1, resamples);
                            }
                            continue 'resample;
                        }
                        if num < 0 || num > DEN * det {
                            inside = false;
                            break;
                        }
                    }
                    if inside {
                        containing += 1;
                    }
                }
                return (u64::from(containing != 1), resamples);
            }
        };

        let fold = |acc: (u64, u64), item: (u64, u64)| (acc.0 + item.0, acc.1 + item.1);

        #[cfg(feature = "parallel")]
        if parallel {
            return (0..opts.points)
                .into_par_iter()
                .map(check_point)
                .reduce(|| (0, 0), fold);
        }
        let _ = parallel;
        (0..opts.points).map(check_point).fold((0, 0), fold)
    }
}

fn det3(c0: [i128; 3], c1: [i128; 3], c2: [i128; 3]) -> i128 {
    c0[0] * (c1[1] * c2[2] - c1[2] * c2[1]) - c1[0] * (c0[1] * c2[2] - c0[2] * c2[1])
        + c2[0] * (c0[1] * c1[2] - c0[2] * c1[1])
}

/// Check that consecutive members are compatible triangulated tilings of
/// levels `0..=n`.
pub fn check_admissible(family: &[TriangulatedPlabicTiling]) -> Result<()> {
    if family.is_empty() {
        return Err(Error::InvalidDocument("empty family".into()));
    }
    let ground = family[0].ground();
    if family.len() != ground.n() as usize + 1 {
        return Err(Error::InvalidDocument(format!(
            "family needs {} tilings, got {}",
            ground.n() + 1,
            family.len()
        )));
    }
    for (i, t) in family.iter().enumerate() {
        if t.level() as usize != i {
            return Err(Error::InvalidDocument(format!(
                "family member {i} has level {}",
                t.level()
            )));
        }
    }
    for i in 0..family.len() - 1 {
        if !family[i].is_compatible(&family[i + 1])? {
            return Err(Error::IncompatibleLevels(i as u8, i as u8 + 1));
        }
    }
    Ok(())
}

/// Assemble a fine zonotopal tiling from an admissible family: one tile per
/// white triangle across all levels.
pub fn assemble(
    config: &CyclicConfig,
    family: &[TriangulatedPlabicTiling],
) -> Result<ZonotopalTiling> {
    check_admissible(family)?;
    let mut tiles = BTreeSet::new();
    for t in family {
        for tri in t.triangles() {
            if tri.color != Color::White {
                continue;
            }
            let [x, y, z] = t.triangle_labels(tri);
            let base = x.intersection(y).intersection(z);
            let free_set = x.union(y).union(z).minus(base);
            let free_v = free_set.to_vec();
            if base.card() + 1 != t.level() || free_v.len() != 3 {
                return Err(Error::InvalidTiling(format!(
                    "white triangle {:?} {:?} {:?} is not of clique form",
                    x.to_vec(),
                    y.to_vec(),
                    z.to_vec()
                )));
            }
            tiles.insert(Tile {
                base,
                free: [free_v[0], free_v[1], free_v[2]],
            });
        }
    }
    ZonotopalTiling::new(config.clone(), tiles)
}

/// Assemble from the canonical triangulations of every level of a maximal
/// chord separated collection.
pub fn from_collection(d: &SeparatedCollection) -> Result<ZonotopalTiling> {
    let ground = d.ground();
    let family: Vec<TriangulatedPlabicTiling> = (0..=ground.n())
        .map(|k| TriangulatedPlabicTiling::triangulate_level(d, k))
        .collect::<Result<_>>()?;
    let config = CyclicConfig::standard(ground);
    let z = assemble(&config, &family)?;
    if z.vert() != *d {
        return Err(Error::InvalidTiling(
            "assembled tiling does not reproduce the collection".into(),
        ));
    }
    Ok(z)
}
