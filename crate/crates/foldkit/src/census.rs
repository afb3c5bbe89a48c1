//! Parallel fold-count census over fixed prefix blocks, with per-block
//! checkpoint shards.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use foldkit_core::rsets::{census_range, word_space_size, Census, RsetError, WordSpace, DEFAULT_BUDGET};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_VAR: &str = "FOLDKIT_BUDGET";

const MAX_BLOCKS: u128 = 4096;
const MIN_BLOCK_WORDS: u128 = 4096;

#[derive(Debug)]
pub enum CensusError {
    Rset(RsetError),
    BadBudget(String),
    Io { path: PathBuf, source: io::Error },
    ThreadPool(String),
}

impl fmt::Display for CensusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusError::Rset(e) => write!(f, "{e}"),
            CensusError::BadBudget(v) => write!(f, "{BUDGET_VAR}={v:?} is not a non-negative integer"),
            CensusError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CensusError::ThreadPool(msg) => write!(f, "thread pool: {msg}"),
        }
    }
}

impl std::error::Error for CensusError {}

impl From<RsetError> for CensusError {
    fn from(e: RsetError) -> Self {
        CensusError::Rset(e)
    }
}

/// The census budget: `FOLDKIT_BUDGET` if set, else [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> Result<u128, CensusError> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CensusError::BadBudget(v)),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// How the word space splits into blocks. The split depends only on the space,
/// so shards from runs with different thread counts are interchangeable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockLayout {
    pub size: u128,
    pub blocks: u128,
    pub block_words: u128,
}

impl BlockLayout {
    pub fn new(n: usize, m: u32, space: WordSpace) -> Result<BlockLayout, RsetError> {
        if m == 0 {
            return Err(RsetError::InvalidParameter("alphabet size must be at least 1"));
        }
        let size = word_space_size(n, m, space).ok_or(RsetError::Overflow)?;
        let base = match space {
            WordSpace::All => 2 * m as u128,
            WordSpace::Alternating => m as u128,
        };
        // blocks are the words sharing a fixed prefix
        let mut blocks = 1u128;
        for _ in 0..2 * n {
            let next = blocks * base;
            if next > MAX_BLOCKS || size / next < MIN_BLOCK_WORDS {
                break;
            }
            blocks = next;
        }
        Ok(BlockLayout {
            size,
            blocks,
            block_words: size / blocks,
        })
    }

    pub fn range(&self, block: u128) -> std::ops::Range<u128> {
        block * self.block_words..(block + 1) * self.block_words
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub budget: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub k: u128,
    pub words: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Shard {
    n: usize,
    m: u32,
    space: String,
    block: u128,
    blocks: u128,
    counts: Vec<CountRow>,
}

pub fn space_name(space: WordSpace) -> &'static str {
    match space {
        WordSpace::All => "all",
        WordSpace::Alternating => "alternating",
    }
}

/// `census_n{n}_m{m}_block{b}.json`, with `_alt` before `_block` for the
/// alternating space.
pub fn shard_name(n: usize, m: u32, space: WordSpace, block: u128) -> String {
    let alt = match space {
        WordSpace::All => "",
        WordSpace::Alternating => "_alt",
    };
    format!("census_n{n}_m{m}{alt}_block{block}.json")
}

pub fn rows(census: &Census) -> Vec<CountRow> {
    census.counts.iter().map(|(&k, &words)| CountRow { k, words }).collect()
}

fn read_shard(path: &Path, expect: &Shard) -> Option<Census> {
    let text = fs::read_to_string(path).ok()?;
    let shard: Shard = serde_json::from_str(&text).ok()?;
    let same = (shard.n, shard.m, &shard.space, shard.block, shard.blocks)
        == (expect.n, expect.m, &expect.space, expect.block, expect.blocks);
    if !same {
        return None;
    }
    let counts: BTreeMap<u128, u64> = shard.counts.iter().map(|r| (r.k, r.words)).collect();
    Some(Census { counts, ..Census::new(0, 1, WordSpace::All) })
}

fn write_shard(path: &Path, shard: &Shard) -> Result<(), CensusError> {
    let io_err = |source| CensusError::Io { path: path.to_path_buf(), source };
    let tmp = path.with_extension("json.tmp");
    let text = serde_json::to_string(shard).expect("shards serialize");
    fs::write(&tmp, text).map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

fn run_block(
    n: usize,
    m: u32,
    space: WordSpace,
    layout: &BlockLayout,
    block: u128,
    dir: Option<&Path>,
) -> Result<Census, CensusError> {
    let mut shard = Shard {
        n,
        m,
        space: space_name(space).to_string(),
        block,
        blocks: layout.blocks,
        counts: Vec::new(),
    };
    let path = dir.map(|d| d.join(shard_name(n, m, space, block)));
    if let Some(done) = path.as_deref().and_then(|p| read_shard(p, &shard)) {
        return Ok(Census { n, m, space, ..done });
    }
    let census = census_range(n, m, space, layout.range(block));
    if let Some(path) = path {
        shard.counts = rows(&census);
        write_shard(&path, &shard)?;
    }
    Ok(census)
}

/// Tallies fold counts over the whole space in parallel. Shards already in
/// the checkpoint directory are reused; missing or mismatched ones are recomputed.
pub fn parallel_census(n: usize, m: u32, space: WordSpace, opts: &CensusOptions) -> Result<Census, CensusError> {
    let layout = BlockLayout::new(n, m, space)?;
    if layout.size > opts.budget {
        return Err(RsetError::BudgetExceeded { required: layout.size, budget: opts.budget }.into());
    }
    let dir = opts.checkpoint.as_deref();
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|source| CensusError::Io { path: dir.to_path_buf(), source })?;
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = opts.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| CensusError::ThreadPool(e.to_string()))?;
    let blocks = u64::try_from(layout.blocks).expect("block count is capped");
    let parts: Vec<Census> = pool.install(|| {
        (0..blocks)
            .into_par_iter()
            .map(|b| run_block(n, m, space, &layout, b as u128, dir))
            .collect::<Result<_, _>>()
    })?;
    let mut total = Census::new(n, m, space);
    for part in &parts {
        total.merge(part);
    }
    Ok(total)
}
