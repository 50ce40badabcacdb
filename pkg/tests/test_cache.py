import random

from sentiboard.cache import MISS, ResultCache, cache_key
from sentiboard.ingestion import normalize_query


class TestCacheKey:
    def test_term_order_never_matters(self):
        a = normalize_query(["a", "b"], "valence-rule")
        b = normalize_query(["b", "a"], "valence-rule")
        assert cache_key(a) == cache_key(b)

    def test_algorithm_in_key(self):
        a = normalize_query(["a"], "valence-rule")
        b = normalize_query(["a"], "pattern-average")
        assert cache_key(a) != cache_key(b)

    def test_language_filter_in_key(self):
        a = normalize_query(["a"], "valence-rule", language="en")
        b = normalize_query(["a"], "valence-rule", language="de")
        assert cache_key(a) != cache_key(b)

    def test_clamp_flag_excluded(self):
        clamped = normalize_query(["a"], "valence-rule", max_results=9999)
        explicit = normalize_query(["a"], "valence-rule", max_results=1000)
        assert clamped.clamped and not explicit.clamped
        assert cache_key(clamped) == cache_key(explicit)

    def test_deterministic(self):
        q = normalize_query(["#x", "@y"], "valence-rule", origin="NO",
                            time_from="2022-03-01T00:00:00Z")
        assert cache_key(q) == cache_key(q)


class TestTtl:
    def test_hit_before_expiry(self):
        cache = ResultCache(ttl=60)
        cache.put("k", [1], now=0.0)
        assert cache.get("k", now=59.0) == [1]

    def test_miss_at_expiry_instant(self):
        cache = ResultCache(ttl=60)
        cache.put("k", [1], now=0.0)
        assert cache.get("k", now=60.0) is MISS

    def test_never_stored_is_miss(self):
        assert ResultCache().get("nope", now=0.0) is MISS

    def test_overwrite_refreshes(self):
        cache = ResultCache(ttl=60)
        cache.put("k", [1], now=0.0)
        cache.put("k", [2], now=30.0)
        assert cache.get("k", now=80.0) == [2]

    def test_empty_list_is_cacheable(self):
        cache = ResultCache(ttl=60)
        cache.put("k", [], now=0.0)
        assert cache.get("k", now=1.0) == []


class TestCapacity:
    def test_least_recently_stored_evicted_first(self):
        cache = ResultCache(ttl=1000, capacity=2)
        cache.put("a", 1, now=0.0)
        cache.put("b", 2, now=1.0)
        cache.put("c", 3, now=2.0)
        assert cache.get("a", now=3.0) is MISS
        assert cache.get("b", now=3.0) == 2
        assert cache.get("c", now=3.0) == 3

    def test_restore_counts_as_recent(self):
        cache = ResultCache(ttl=1000, capacity=2)
        cache.put("a", 1, now=0.0)
        cache.put("b", 2, now=1.0)
        cache.put("a", 10, now=2.0)  # refresh: "b" is now oldest-stored
        cache.put("c", 3, now=3.0)
        assert cache.get("b", now=4.0) is MISS
        assert cache.get("a", now=4.0) == 10


class TestRandomizedSchedule:
    def test_capacity_and_freshness_hold_over_10k_ops(self):
        rng = random.Random(1234)
        capacity = 32
        cache = ResultCache(ttl=50, capacity=capacity)
        model: dict[str, tuple[int, float]] = {}
        now = 0.0
        for op in range(10_000):
            now += rng.random() * 5
            key = f"k{rng.randrange(64)}"
            if rng.random() < 0.5:
                cache.put(key, op, now=now)
                model[key] = (op, now)
            else:
                value = cache.get(key, now=now)
                if value is not MISS:
                    stored_value, stored_at = model[key]
                    assert value == stored_value
                    assert now < stored_at + 50, "expired entry served"
            assert len(cache) <= capacity
