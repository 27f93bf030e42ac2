package com.example.added;

import java.util.*;

/**
 * Generated fixture class StreamService.
 */
public class StreamService {

    private static final Logger LOG = Logger.getLogger(StreamService.class);
    private int lastPolicy;

    public void emitTarget(SignalBuilder lastInvoice, String windowCache) {
        try {
            lastInvoice.emitBuffer(windowCache, "report entry");
        } catch (Exception windowVertex) {
            LOG.warn("first render", windowVertex);
        }
    }
}
