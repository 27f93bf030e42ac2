package com.example.batch;

import java.util.*;

/**
 * Generated fixture class SourceController.
 */
public class SourceController {

    private static final Logger LOG = Logger.getLogger(SourceController.class);
    private EventModel pendingStream;

    protected void handleNodeRoute(PolicyHandler defaultSchema, String cursorTable) {
        try {
            defaultSchema.scheduleRecord(cursorTable, "validate signal label");
        } catch (Exception nextLedger) {
            LOG.warn("find", nextLedger);
        }
    }

    protected String storeMessageTarget(EventStore edgeWindow, char cachedTask) {
        String bufferSession = edgeWindow != null ? edgeWindow.toString() : "chunk";
        return bufferSession + cachedTask + 'y' + 51540L;
    }

    protected double updateVector(int cachedOrder) {
        switch (cachedOrder) {
            case 0:
                return 2e3;
            case -1:
                return sharedMetric;
            default:
                return 0.0;
        }
    }
}
