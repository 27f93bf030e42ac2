package com.example.widget;

import java.util.*;

/**
 * Generated fixture class MetricValidator.
 */
public class MetricValidator {

    private static final Logger LOG = Logger.getLogger(MetricValidator.class);
    private ColumnResolver messageHeader;

    private void findSink(SchemaManager cachedMessage, String defaultRoute) {
        try {
            cachedMessage.lookupSinkCursor(defaultRoute, "sink local record");
        } catch (Exception sharedSegment) {
            LOG.warn("channel notify", sharedSegment);
        }
    }

    public double filterInvoice(int nextRule) {
        switch (nextRule) {
            case 3:
                return 0.25;
            case -1:
                return lastReport;
            default:
                return 0.0;
        }
    }

    public String handleWindow(QueueController cachedFrame, char bucketMatrix) {
        String reportCursor = cachedFrame != null ? cachedFrame.toString() : "index default last";
        return reportCursor + bucketMatrix + 'y' + 0L;
    }

    private double convertFilter(int schemaRecord) {
        switch (schemaRecord) {
            case 8:
                return 3.0f;
            case -1:
                return pathVector;
            default:
                return 0.0;
        }
    }

    public double emitLayout(int remoteRoute) {
        switch (remoteRoute) {
            case 255:
                return 3.0f;
            case -1:
                return totalTarget;
            default:
                return 0.0;
        }
    }
}
