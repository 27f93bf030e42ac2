package org.sample;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;
import java.util.function.Predicate;

/**
 * Keeps track of stock levels per SKU.
 */
public class Inventory implements Iterable<String> {

    private final Map<String, Integer> stock = new HashMap<String, Integer>();
    private int capacity = 0x7FFF;
    private static final char SEPARATOR = '\t';

    public Inventory(int capacity) {
        this.capacity = capacity;
    }

    public int count(String sku) {
        Integer n = stock.get(sku);
        return n == null ? 0 : n;
    }

    public void add(String sku, int amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("amount must be positive: " + amount);
        }
        stock.put(sku, count(sku) + amount);
    }

    public boolean remove(String sku, int amount) {
        int have = count(sku);
        if (have >= amount) {
            stock.put(sku, have - amount);
            return true;
        } else {
            return false;
        }
    }

    public List<String> matching(Predicate<String> filter) {
        List<String> out = new ArrayList<String>();
        for (String sku : stock.keySet()) {
            if (filter.test(sku)) {
                out.add(sku);
            }
        }
        return out;
    }

    public long total() {
        long sum = 0L;
        for (int v : stock.values()) {
            sum += v;
        }
        return sum;
    }

    public String describe(String sku) {
        return sku + SEPARATOR + count(sku) + "/" + capacity;
    }

    public int[] histogram(int bins) {
        int[] h = new int[bins];
        outer:
        for (int v : stock.values()) {
            for (int b = 0; b < bins; b++) {
                if (v < (b + 1) * (capacity / bins)) {
                    h[b]++;
                    continue outer;
                }
            }
            h[bins - 1]++;
        }
        return h;
    }

    @Override
    public java.util.Iterator<String> iterator() {
        return stock.keySet().iterator();
    }
}
