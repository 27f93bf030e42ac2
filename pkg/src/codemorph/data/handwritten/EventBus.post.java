package org.sample;

import java.util.Collections;
import java.util.List;
import java.util.Map;
import java.util.concurrent.ConcurrentHashMap;
import java.util.concurrent.CopyOnWriteArrayList;

public class EventBus {

    public interface Listener<E> {
        void onEvent(E event) throws Exception;
    }

    public enum Mode {
        SYNC {
            @Override
            public boolean isAsync() {
                return false;
            }
        },
        ASYNC;

        public boolean isAsync() {
            return true;
        }
    }

    private final Map<Class<?>, List<Listener<Object>>> listeners = new ConcurrentHashMap<>();
    private volatile Mode mode = Mode.SYNC;

    @SuppressWarnings("unchecked")
    public <E> void subscribe(Class<E> type, Listener<? super E> listener) {
        listeners.computeIfAbsent(type, k -> new CopyOnWriteArrayList<>())
                .add((Listener<Object>) listener);
    }

    public int publish(Object event) {
        int delivered = 0;
        List<Listener<Object>> targets = listeners.getOrDefault(event.getClass(), Collections.emptyList());
        for (Listener<Object> l : targets) {
            try {
                l.onEvent(event);
                delivered++;
            } catch (Exception e) {
                System.err.println("listener failed: " + e.getMessage());
            }
        }
        return delivered;
    }

    public void setMode(Mode mode) {
        if (mode == null) {
            throw new NullPointerException("mode");
        }
        this.mode = mode;
    }

    public void clear() {
        listeners.clear();
    }

    public Runnable deferred(final Object event) {
        return () -> publish(event);
    }
}
