//! Worked example trees used as fixtures by tests and the CLI stats demo.

use super::binary::BinaryTree;
use super::irt::{IrtTree, IrtVertex};
use super::rt::RtTree;

/// An 8-vertex increasing binary tree whose inorder word is 57316284.
pub fn sample_binary_8() -> BinaryTree {
    BinaryTree::from_children(&[
        (Some(3), Some(2)), // 1
        (Some(6), Some(4)), // 2
        (Some(5), None),    // 3
        (Some(8), None),    // 4
        (None, Some(7)),    // 5
        (None, None),       // 6
        (None, None),       // 7
        (None, None),       // 8
    ])
}

/// A 6-vertex restricted ternary tree with one middle chain (2 - 4).
pub fn sample_rt_6() -> RtTree {
    RtTree::from_children(&[
        (Some(2), None, Some(3)), // 1
        (None, Some(4), None),    // 2
        (Some(5), None, None),    // 3
        (None, None, None),       // 4
        (None, None, Some(6)),    // 5
        (None, None, None),       // 6
    ])
}

/// A 13-vertex interval-labeled restricted ternary tree on the label set
/// \[0,16\].
pub fn sample_irt_16() -> IrtTree {
    let v =
        |lo: usize, hi: usize, left: Option<usize>, middle: Option<usize>, right: Option<usize>| {
            IrtVertex {
                lo,
                hi,
                left,
                middle,
                right,
            }
        };
    IrtTree::from_vertices(vec![
        v(0, 1, Some(1), None, None),    // 0: {0,1}
        v(2, 3, Some(2), None, Some(3)), // 1: {2,3}
        v(4, 4, Some(6), None, None),    // 2: {4}
        v(5, 5, Some(5), None, Some(4)), // 3: {5}
        v(6, 6, None, Some(9), None),    // 4: {6}
        v(7, 7, None, Some(8), None),    // 5: {7}
        v(8, 8, None, None, Some(7)),    // 6: {8}
        v(9, 9, None, Some(11), None),   // 7: {9}
        v(10, 10, None, None, None),     // 8: {10}
        v(11, 11, None, Some(10), None), // 9: {11}
        v(12, 13, None, None, Some(12)), // 10: {12,13}
        v(14, 15, None, None, None),     // 11: {14,15}
        v(16, 16, None, None, None),     // 12: {16}
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_valid() {
        assert!(sample_binary_8().is_valid());
        assert!(sample_rt_6().is_valid());
        assert!(sample_irt_16().is_valid());
    }
}
