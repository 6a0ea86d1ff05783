//! In-degree templates for orienting an attached path `v_1 .. v_n`.
//!
//! Each template gives the in-degree every path vertex receives from the
//! path's own arcs. Endpoint entries are contributions to vertices that
//! already exist in the graph. Long paths are produced from a short base
//! pattern by repeatedly replacing the leftmost interior vertex of in-degree
//! 0 with `0, 2, 0` (both new arcs pointing at the middle vertex).

use crate::error::RealizeError;
use crate::graph::realize_path;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathTemplate {
    /// `0,1,..,0,2,0` for length >= 5; `0,1,2,1,0` at 4; `0,1,2,0` at 3.
    Base,
    /// The second length-4 orientation, `0,2,0,2,0`.
    BaseAlt,
    /// `0,2,..,2,0` for length >= 4.
    ConnectFan,
    /// `1,0,..,0,1` for length >= 4: both endpoints gain one.
    In1,
    /// Odd >= 5: `0,2,..,0,2,0`; even >= 6: `0,2,..,1,0`; 4: `0,2,0,2,0`;
    /// 3: `0,2,1,0`.
    ConnectFan23,
    /// Odd >= 5: `0,1,..,0,2,0`; even >= 4: `0,1,..,1,0`.
    ConnectFan23a,
    /// Length 4 onto a 1-2 edge: `0,2,1,0,1`, raising the far endpoint.
    RaiseEnd,
}

impl PathTemplate {
    pub const ALL: [PathTemplate; 7] = [
        PathTemplate::Base,
        PathTemplate::BaseAlt,
        PathTemplate::ConnectFan,
        PathTemplate::In1,
        PathTemplate::ConnectFan23,
        PathTemplate::ConnectFan23a,
        PathTemplate::RaiseEnd,
    ];

    pub fn admits(self, len: usize) -> bool {
        match self {
            PathTemplate::Base | PathTemplate::ConnectFan23 => len >= 3,
            PathTemplate::BaseAlt | PathTemplate::RaiseEnd => len == 4,
            PathTemplate::ConnectFan | PathTemplate::In1 | PathTemplate::ConnectFan23a => len >= 4,
        }
    }

    /// In-degree added to `(v_1, v_n)`.
    pub fn endpoint_contribution(self) -> (u32, u32) {
        match self {
            PathTemplate::In1 => (1, 1),
            PathTemplate::RaiseEnd => (0, 1),
            _ => (0, 0),
        }
    }

    /// Short pattern that the sequence for `len` edges grows from.
    fn base(self, len: usize) -> &'static [u32] {
        let odd = len % 2 == 1;
        match self {
            PathTemplate::Base => match len {
                3 => &[0, 1, 2, 0],
                4 => &[0, 1, 2, 1, 0],
                _ if odd => &[0, 1, 2, 0, 2, 0],
                _ => &[0, 1, 2, 1, 0, 2, 0],
            },
            PathTemplate::BaseAlt => &[0, 2, 0, 2, 0],
            PathTemplate::ConnectFan if odd => &[0, 2, 1, 0, 2, 0],
            PathTemplate::ConnectFan => &[0, 2, 0, 2, 0],
            PathTemplate::In1 if odd => &[1, 0, 2, 1, 0, 1],
            PathTemplate::In1 => &[1, 0, 2, 0, 1],
            PathTemplate::ConnectFan23 => match len {
                3 => &[0, 2, 1, 0],
                4 => &[0, 2, 0, 2, 0],
                _ if odd => &[0, 2, 1, 0, 2, 0],
                _ => &[0, 2, 1, 0, 2, 1, 0],
            },
            PathTemplate::ConnectFan23a => match len {
                4 => &[0, 1, 2, 1, 0],
                _ if odd => &[0, 1, 2, 0, 2, 0],
                _ => &[0, 1, 2, 0, 2, 1, 0],
            },
            PathTemplate::RaiseEnd => &[0, 2, 1, 0, 1],
        }
    }

    /// In-degree sequence for a path with `len` edges, or `None` if the
    /// length is not admissible.
    pub fn sequence(self, len: usize) -> Option<Vec<u32>> {
        if !self.admits(len) {
            return None;
        }
        let mut seq = self.base(len).to_vec();
        while seq.len() - 1 < len {
            let i = (1..seq.len() - 1).find(|&i| seq[i] == 0)?;
            seq.splice(i + 1..i + 1, [2, 0]);
        }
        Some(seq)
    }

    /// Arc directions for the template on a path with `len` edges; entry `i`
    /// is `true` when edge `v_i v_{i+1}` points toward `v_{i+1}`.
    pub fn arcs(self, len: usize) -> Result<Vec<bool>, RealizeError> {
        let seq = self.sequence(len).ok_or(RealizeError::TooShort)?;
        realize_path(&seq, (false, false))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path_indegrees;

    #[test]
    fn short_sequences() {
        use PathTemplate::*;
        assert_eq!(Base.sequence(3).unwrap(), [0, 1, 2, 0]);
        assert_eq!(Base.sequence(4).unwrap(), [0, 1, 2, 1, 0]);
        assert_eq!(Base.sequence(5).unwrap(), [0, 1, 2, 0, 2, 0]);
        assert_eq!(Base.sequence(7).unwrap(), [0, 1, 2, 0, 2, 0, 2, 0]);
        assert_eq!(Base.sequence(8).unwrap(), [0, 1, 2, 1, 0, 2, 0, 2, 0]);
        assert_eq!(ConnectFan.sequence(6).unwrap(), [0, 2, 0, 2, 0, 2, 0]);
        assert_eq!(In1.sequence(6).unwrap(), [1, 0, 2, 0, 2, 0, 1]);
        assert_eq!(
            ConnectFan23.sequence(8).unwrap(),
            [0, 2, 1, 0, 2, 0, 2, 1, 0]
        );
        assert_eq!(ConnectFan23a.sequence(4).unwrap(), [0, 1, 2, 1, 0]);
        assert_eq!(ConnectFan23a.sequence(6).unwrap(), [0, 1, 2, 0, 2, 1, 0]);
        assert!(BaseAlt.sequence(5).is_none());
        assert!(In1.sequence(3).is_none());
    }

    #[test]
    fn length_five_base_realizes() {
        // v2 = 1, v_{n-2} = 0, v_{n-1} = 2
        let bits = PathTemplate::Base.arcs(5).unwrap();
        assert_eq!(path_indegrees(&bits), vec![0, 1, 2, 0, 2, 0]);
    }

    #[test]
    fn every_template_realizes() {
        for t in PathTemplate::ALL {
            for len in 2..=50 {
                let Some(seq) = t.sequence(len) else { continue };
                assert_eq!(seq.len(), len + 1, "{t:?} {len}");
                let bits = t.arcs(len).unwrap();
                assert_eq!(path_indegrees(&bits), seq, "{t:?} {len}");
            }
        }
    }
}
