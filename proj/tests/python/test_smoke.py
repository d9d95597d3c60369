"""Python smoke tests for the localelab extension module."""

import localelab as ll


def test_three_chain():
    f = ll.chain_frame(3)
    assert f.size == 3
    assert f.name(1) == "a"
    assert f.heyting(1, 0) == 0
    assert not f.is_boolean()

    subs = ll.enumerate_sublocales(f)
    assert len(subs) == 4

    ca = ll.closed_sublocale(f, 1)
    assert ll.is_nowhere_dense(ca)
    value, witness = ll.is_maximal_nwd(ca)
    assert value and witness is None
    assert ll.is_hmnd(ca)

    bl = ll.booleanization(f)
    assert bl.members == [0, 2]
    assert ll.supplement(bl) == ca


def test_classify_dict():
    f = ll.chain_frame(4)
    out = ll.classify(f, [2, 3])  # c(b)
    flags = out["flags"]
    assert flags["nowhere_dense"]
    assert not flags["maximal_nwd"]
    assert out["witnesses"]["maximal_nwd_defeater"] == "a"


def test_generators_and_iso():
    frames = ll.frames_from_posets_up_to(2)
    assert len(frames) == 4
    assert any(ll.frames_isomorphic(g, ll.boolean_frame(2)) for g in frames)
    p = ll.downset_frame(2, [(0, 1)])
    assert ll.frames_isomorphic(p, ll.chain_frame(3))


def test_checks():
    ids = ll.check_ids()
    assert "prop-mndcmnd" in ids and "thm-thmmnd" in ids
    r = ll.run_check("ex-three-chain", max_poset=2, max_points=1, max_map_size=2)
    assert r["passed"]
    assert r["hypothesisSatisfied"] > 0
    r2 = ll.run_check("prop-mndcmnd", max_poset=3, max_points=1, max_map_size=2)
    assert r2["passed"] and r2["instances"] > 0


def test_spaces_and_maps():
    x = ll.Space(2, [[], [0], [0, 1]], "sierp")
    f = ll.open_set_frame(x)
    assert ll.frames_isomorphic(f, ll.chain_frame(3))
    assert ll.spatial_maximal_nwd(x, [1])
    ind = ll.induced_sublocale(x, [1], f)
    assert ll.is_maximal_nwd(ind)[0]
    assert len(ll.spaces_up_to_homeo(3)) == 8

    maps = ll.localic_maps(ll.chain_frame(3), ll.chain_frame(2))
    assert len(maps) == 1
    assert maps[0]["open"] and not maps[0]["dense_to_dense"]


def test_errors():
    try:
        ll.build_frame(2, [(0, 1), (1, 0)])
    except Exception as e:  # noqa: BLE001
        assert "NotAPartialOrder" in str(e)
    else:
        raise AssertionError("cycle accepted")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("python smoke: all ok")
